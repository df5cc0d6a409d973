from __future__ import annotations

from math import gcd, lcm, prod
from typing import Any, Sequence

import numpy as np

from diffgraph.groups.base import FiniteGroup, ForeignElementError, GroupCapError
from diffgraph.numtheory import factorize, solve_congruences

ENUMERATION_CAP = 10**7


class AbelianGroup(FiniteGroup):
    """Z_m1 x ... x Z_mk with elements as residue tuples.

    A single factor uses plain ints as element ids. Pairwise operations never
    enumerate the group, so huge orders are fine as long as nothing asks for
    the element list.
    """

    backend = "factored-abelian"

    def __init__(self, moduli: Sequence[int], spec: str = ""):
        moduli = tuple(int(m) for m in moduli)
        if not moduli or any(m < 1 for m in moduli):
            raise ValueError(f"moduli must be positive, got {moduli}")
        self.moduli = moduli
        self.scalar = len(moduli) == 1
        self.order = prod(moduli)
        self.spec = spec or " x ".join(f"Z{m}" for m in moduli)
        self.identity = 0 if self.scalar else (0,) * len(moduli)
        self._strides = tuple(prod(moduli[i + 1:]) for i in range(len(moduli)))
        self._orders: np.ndarray | None = None

    def _tuple(self, a: Any) -> tuple[int, ...]:
        return (a,) if self.scalar else a

    def _wrap(self, t: Sequence[int]) -> Any:
        return int(t[0]) if self.scalar else tuple(int(x) for x in t)

    def contains(self, a: Any) -> bool:
        t = self._tuple(a)
        return (
            isinstance(t, tuple)
            and len(t) == len(self.moduli)
            and all(isinstance(x, (int, np.integer)) and not isinstance(x, bool) and 0 <= x < m for x, m in zip(t, self.moduli))
        )

    def multiply(self, a: Any, b: Any) -> Any:
        self.check(a)
        self.check(b)
        return self._wrap([(x + y) % m for x, y, m in zip(self._tuple(a), self._tuple(b), self.moduli)])

    def inverse(self, a: Any) -> Any:
        self.check(a)
        return self._wrap([(-x) % m for x, m in zip(self._tuple(a), self.moduli)])

    def power(self, a: Any, k: int) -> Any:
        self.check(a)
        return self._wrap([(k * x) % m for x, m in zip(self._tuple(a), self.moduli)])

    def order_of(self, a: Any) -> int:
        self.check(a)
        return lcm(*(m // gcd(x, m) for x, m in zip(self._tuple(a), self.moduli)))

    def commute(self, a: Any, b: Any) -> bool:
        self.check(a)
        self.check(b)
        return True

    def cyclic_subgroup(self, a: Any) -> list[Any]:
        return [self.power(a, k) for k in range(self.order_of(a))]

    def describe(self, a: Any) -> str:
        self.check(a)
        return str(a) if self.scalar else "(" + ",".join(map(str, a)) + ")"

    def in_cyclic(self, a: Any, b: Any) -> bool:
        """Whether ``a`` is a power of ``b``, by solving k*b = a coordinatewise."""
        self.check(a)
        self.check(b)
        pairs = []
        for x, y, m in zip(self._tuple(a), self._tuple(b), self.moduli):
            g = gcd(y, m)
            if x % g:
                return False
            mm = m // g
            pairs.append(((x // g) * pow(y // g, -1, mm) % mm if mm > 1 else 0, mm))
        return solve_congruences(pairs) is not None

    def prime_part(self, a: Any, p: int) -> Any:
        """The p-primary component a^u of ``a``, with u = 1 mod p^s and 0 mod the rest."""
        o = self.order_of(a)
        ps = 1
        while o % (ps * p) == 0:
            ps *= p
        rest = o // ps
        if ps == 1:
            return self.identity
        u = rest * pow(rest, -1, ps) % o
        return self.power(a, u)

    def is_cyclic_pair(self, a: Any, b: Any) -> bool:
        """<a, b> is cyclic iff each prime component pair is nested."""
        oa, ob = self.order_of(a), self.order_of(b)
        for p, _ in factorize(gcd(oa, ob)) if gcd(oa, ob) > 1 else ():
            ap, bp = self.prime_part(a, p), self.prime_part(b, p)
            if not (self.in_cyclic(ap, bp) or self.in_cyclic(bp, ap)):
                return False
        return True

    # enumeration

    def require_enumerable(self) -> None:
        if self.order > ENUMERATION_CAP:
            raise GroupCapError(f"refusing to enumerate {self.order} elements (cap {ENUMERATION_CAP})")

    def element(self, i: int) -> Any:
        if not 0 <= i < self.order:
            raise ForeignElementError(f"index {i} out of range")
        return self._wrap([(i // s) % m for s, m in zip(self._strides, self.moduli)])

    def index(self, a: Any) -> int:
        self.check(a)
        return sum(x * s for x, s in zip(self._tuple(a), self._strides))

    def _coord_arrays(self) -> np.ndarray:
        self.require_enumerable()
        ar = np.arange(self.order, dtype=np.int64)
        return np.stack([(ar // s) % m for s, m in zip(self._strides, self.moduli)], axis=1)

    def _encode(self, coords: np.ndarray) -> np.ndarray:
        return coords @ np.array(self._strides, dtype=np.int64)

    def order_array(self) -> np.ndarray:
        if self._orders is None:
            c = self._coord_arrays()
            m = np.array(self.moduli, dtype=np.int64)
            self._orders = np.lcm.reduce(m // np.gcd(c, m), axis=1)
        return self._orders

    def power_indices(self, i: int) -> np.ndarray:
        t = np.array(self._tuple(self.element(i)), dtype=np.int64)
        m = np.array(self.moduli, dtype=np.int64)
        o = lcm(*(int(mi) // gcd(int(x), int(mi)) for x, mi in zip(t, m)))
        ks = np.arange(o, dtype=np.int64)[:, None]
        return self._encode((ks * t) % m)

    def mul_row(self, i: int) -> np.ndarray:
        t = np.array(self._tuple(self.element(i)), dtype=np.int64)
        return self._encode((self._coord_arrays() + t) % np.array(self.moduli))

    mul_col = mul_row

    def generators(self) -> list[int]:
        out = []
        for j, s in enumerate(self._strides):
            if self.moduli[j] > 1:
                out.append(s)
        return out
