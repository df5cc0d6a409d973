from __future__ import annotations

from itertools import permutations
from typing import Any

import numpy as np

from diffgraph.groups.base import FiniteGroup, ForeignElementError, GroupCapError
from diffgraph.groups.permutation import Permutation

DEFAULT_PERM_CAP = 10


class PermutationGroup(FiniteGroup):
    """S_n or A_n, enumerated in lexicographic order of image tuples.

    Elements are :class:`Permutation` values. Internally every element is a
    row of 0-based images; a base-n integer code of each row gives the dense
    index by binary search.
    """

    backend = "permutation"

    def __init__(self, n: int, alternating: bool = False, cap: int = DEFAULT_PERM_CAP):
        if n < 1:
            raise ValueError("degree must be >= 1")
        if n > cap:
            raise GroupCapError(f"permutation backend limited to degree {cap}, got {n}")
        self.n = n
        self.alternating = alternating
        self.spec = f"{'A' if alternating else 'S'}{n}"
        perms = np.array(list(permutations(range(n))), dtype=np.int8).reshape(-1, n)
        if alternating:
            perms = perms[_parity(perms) == 0]
        self.perms = perms
        self._weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
        self.codes = perms.astype(np.int64) @ self._weights
        self.order = len(perms)
        self.identity = Permutation.identity(n)
        self._orders: np.ndarray | None = None
        self._order_cache: dict[Permutation, int] = {}

    # element level

    def contains(self, a: Any) -> bool:
        return isinstance(a, Permutation) and a.degree == self.n and (not self.alternating or a.in_alternating())

    def multiply(self, a: Permutation, b: Permutation) -> Permutation:
        self.check(a)
        self.check(b)
        return a * b

    def inverse(self, a: Permutation) -> Permutation:
        self.check(a)
        return a.inverse()

    def order_of(self, a: Permutation) -> int:
        o = self._order_cache.get(a)
        if o is None:
            self.check(a)
            o = self._order_cache[a] = a.order()
        return o

    def describe(self, a: Permutation) -> str:
        return str(a)

    def element(self, i: int) -> Permutation:
        if not 0 <= i < self.order:
            raise ForeignElementError(f"index {i} out of range")
        return Permutation(tuple(int(x) + 1 for x in self.perms[i]))

    def index(self, a: Permutation) -> int:
        self.check(a)
        return int(self.rank(np.array(a.images, dtype=np.int64) - 1)[()])

    def rank(self, rows: np.ndarray) -> np.ndarray:
        """Dense indices of 0-based image rows (any leading shape)."""
        codes = rows.astype(np.int64) @ self._weights
        idx = np.searchsorted(self.codes, codes)
        if np.any(idx >= self.order) or np.any(self.codes[np.minimum(idx, self.order - 1)] != codes):
            raise ForeignElementError("permutation not in group")
        return idx

    # dense kernel

    def order_array(self) -> np.ndarray:
        if self._orders is None:
            ident = np.arange(self.n, dtype=np.int8)
            orders = np.zeros(self.order, dtype=np.int64)
            cur = self.perms.copy()
            k = 1
            orders[(cur == ident).all(axis=1)] = 1
            while (orders == 0).any():
                cur = np.take_along_axis(self.perms, cur.astype(np.int64), axis=1)
                k += 1
                orders[((cur == ident).all(axis=1)) & (orders == 0)] = k
            self._orders = orders
        return self._orders

    def power_indices(self, i: int) -> np.ndarray:
        p = self.perms[i].astype(np.int64)
        rows = [np.arange(self.n)]
        cur = p
        while not np.array_equal(cur, rows[0]):
            rows.append(cur)
            cur = p[cur]
        return self.rank(np.stack(rows))

    def mul_row(self, i: int) -> np.ndarray:
        # (g_i g_j)(x) = g_i(g_j(x))
        return self.rank(self.perms[i].astype(np.int64)[self.perms])

    def mul_col(self, i: int) -> np.ndarray:
        return self.rank(self.perms[:, self.perms[i].astype(np.int64)])

    def generators(self) -> list[int]:
        n = self.n
        if n <= 2:
            return list(range(self.order))
        if self.alternating:
            gens = [Permutation.from_cycles([[1, 2, k]], n) for k in range(3, n + 1)]
        else:
            gens = [Permutation.from_cycles([[1, 2]], n), Permutation.from_cycles([list(range(1, n + 1))], n)]
        return [self.index(g) for g in gens]


def _parity(perms: np.ndarray) -> np.ndarray:
    """0 for even rows, 1 for odd, via inversion counts."""
    n = perms.shape[1]
    inv = np.zeros(len(perms), dtype=np.int64)
    for i in range(n):
        for j in range(i + 1, n):
            inv += perms[:, i] > perms[:, j]
    return inv % 2
