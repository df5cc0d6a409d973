from __future__ import annotations

from abc import ABC, abstractmethod
from collections import Counter
from typing import Any, Hashable, Iterator, Sequence

import numpy as np

ElementId = Hashable


class ForeignElementError(ValueError):
    """An element id that does not belong to the group it was passed to."""


class GroupCapError(ValueError):
    """A construction or enumeration would exceed a configured size cap."""


class FiniteGroup(ABC):
    """Common surface of the cayley, permutation and factored-abelian backends.

    Element ids are backend specific. Every group also has a dense index
    0..|G|-1 (its enumeration order) used by the graph code; ``index`` and
    ``element`` convert between the two.
    """

    backend: str = ""
    spec: str = ""
    order: int = 0
    identity: Any = None

    # -- element level -------------------------------------------------

    @abstractmethod
    def multiply(self, a: ElementId, b: ElementId) -> ElementId: ...

    @abstractmethod
    def inverse(self, a: ElementId) -> ElementId: ...

    @abstractmethod
    def contains(self, a: Any) -> bool: ...

    @abstractmethod
    def describe(self, a: ElementId) -> str: ...

    def check(self, a: Any) -> None:
        if not self.contains(a):
            raise ForeignElementError(f"{a!r} is not an element of {self.spec or self.backend}")

    def power(self, a: ElementId, k: int) -> ElementId:
        self.check(a)
        if k < 0:
            a, k = self.inverse(a), -k
        result = self.identity
        while k:
            if k & 1:
                result = self.multiply(result, a)
            a = self.multiply(a, a)
            k >>= 1
        return result

    def order_of(self, a: ElementId) -> int:
        cache = self.__dict__.setdefault("_order_cache", {})
        if a in cache:
            return cache[a]
        self.check(a)
        k, x = 1, a
        while x != self.identity:
            x = self.multiply(x, a)
            k += 1
        cache[a] = k
        return k

    def commute(self, a: ElementId, b: ElementId) -> bool:
        return self.multiply(a, b) == self.multiply(b, a)

    def cyclic_subgroup(self, a: ElementId) -> list[ElementId]:
        """Powers a^0, a^1, ..., a^(o(a)-1)."""
        self.check(a)
        out = [self.identity]
        x = a
        while x != self.identity:
            out.append(x)
            x = self.multiply(x, a)
        return out

    def closure(self, a: ElementId, b: ElementId) -> set[ElementId]:
        """The subgroup generated by ``a`` and ``b``."""
        pa, pb = self.cyclic_subgroup(a), self.cyclic_subgroup(b)
        if self.commute(a, b):
            h = {self.multiply(x, y) for x in pa for y in pb}
            if len(h) > len(pa) * len(pb):
                raise AssertionError("abelian closure larger than o(a)*o(b)")
            return h
        h = set(pa) | set(pb)
        frontier = list(h)
        while frontier:
            nxt = []
            for x in frontier:
                for g in (a, b):
                    y = self.multiply(x, g)
                    if y not in h:
                        h.add(y)
                        nxt.append(y)
            frontier = nxt
        return h

    # -- enumeration ---------------------------------------------------

    @abstractmethod
    def element(self, i: int) -> ElementId: ...

    @abstractmethod
    def index(self, a: ElementId) -> int: ...

    def elements(self) -> list[ElementId]:
        self.require_enumerable()
        return [self.element(i) for i in range(self.order)]

    def __iter__(self) -> Iterator[ElementId]:
        self.require_enumerable()
        return (self.element(i) for i in range(self.order))

    def __len__(self) -> int:
        return self.order

    def require_enumerable(self) -> None:
        pass

    # -- dense index kernel used by graph construction -------------------

    @abstractmethod
    def order_array(self) -> np.ndarray:
        """Element orders indexed by dense element index."""

    @abstractmethod
    def power_indices(self, i: int) -> np.ndarray:
        """Dense indices of g_i^0, g_i^1, ..., g_i^(o-1)."""

    @abstractmethod
    def mul_row(self, i: int) -> np.ndarray:
        """Indices of g_i * g_j for every j."""

    @abstractmethod
    def mul_col(self, i: int) -> np.ndarray:
        """Indices of g_j * g_i for every j."""

    def generators(self) -> Sequence[int] | None:
        """Dense indices of a generating set, when cheaply known."""
        return None

    def order_histogram(self) -> dict[int, int]:
        return dict(sorted(Counter(self.order_array().tolist()).items()))

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.spec or '?'} order={self.order}>"
