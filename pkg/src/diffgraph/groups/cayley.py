from __future__ import annotations

from typing import Any, Sequence

import numpy as np

from diffgraph.groups.base import FiniteGroup, ForeignElementError

DEFAULT_CAYLEY_CAP = 8192


class CayleyGroup(FiniteGroup):
    """A group given by its full multiplication table; elements are row indices.

    ``coords`` optionally attaches a structured name to each index (for
    example ``(i, j)`` for r^i s^j in a dihedral group) and ``labels`` the
    strings used in exports.
    """

    backend = "cayley"

    def __init__(
        self,
        table: np.ndarray,
        *,
        identity: int | None = None,
        coords: Sequence[Any] | None = None,
        labels: Sequence[str] | None = None,
        spec: str = "",
    ):
        table = np.ascontiguousarray(table, dtype=np.int32)
        n = table.shape[0]
        if table.shape != (n, n) or n < 1:
            raise ValueError(f"cayley table must be square and nonempty, got {table.shape}")
        table.setflags(write=False)
        self.table = table
        self.order = n
        self.spec = spec
        ar = np.arange(n)
        if identity is None:
            hits = np.nonzero((table == ar).all(axis=1) & (table.T == ar).all(axis=1))[0]
            if len(hits) == 0:
                raise ValueError("table has no identity element")
            identity = int(hits[0])
        self.identity = identity
        rows, cols = np.nonzero(table == identity)
        inv = np.full(n, -1, dtype=np.int64)
        inv[rows] = cols
        if (inv < 0).any():
            raise ValueError("table is not a group table: missing inverses")
        self._inv = inv
        self.coords = list(coords) if coords is not None else None
        self._coord_index = {c: i for i, c in enumerate(self.coords)} if self.coords else None
        self.labels = list(labels) if labels is not None else None
        self._orders: np.ndarray | None = None

    # element level

    def contains(self, a: Any) -> bool:
        return isinstance(a, (int, np.integer)) and not isinstance(a, bool) and 0 <= a < self.order

    def multiply(self, a: int, b: int) -> int:
        self.check(a)
        self.check(b)
        return int(self.table[a, b])

    def inverse(self, a: int) -> int:
        self.check(a)
        return int(self._inv[a])

    def order_of(self, a: int) -> int:
        self.check(a)
        return int(self.order_array()[a])

    def cyclic_subgroup(self, a: int) -> list[int]:
        self.check(a)
        return self.power_indices(int(a)).tolist()

    def closure(self, a: int, b: int) -> set[int]:
        if not self.commute(a, b):
            return super().closure(a, b)
        # abelian case: <a,b> is the product set <a><b>, read off the table in one go
        pa, pb = self.power_indices(int(a)), self.power_indices(int(b))
        return set(np.unique(self.table[np.ix_(pa, pb)]).tolist())

    def describe(self, a: int) -> str:
        self.check(a)
        return self.labels[a] if self.labels else str(int(a))

    def element(self, i: int) -> int:
        self.check(i)
        return int(i)

    def index(self, a: int) -> int:
        self.check(a)
        return int(a)

    def from_coords(self, c: Any) -> int:
        """Dense index of the element with structured name ``c``."""
        if self._coord_index is None or c not in self._coord_index:
            raise ForeignElementError(f"no element with coordinates {c!r}")
        return self._coord_index[c]

    # dense kernel

    def order_array(self) -> np.ndarray:
        if self._orders is None:
            n, e, t = self.order, self.identity, self.table
            ar = np.arange(n)
            orders = np.zeros(n, dtype=np.int64)
            orders[e] = 1
            cur = ar.copy()
            k = 1
            while (orders == 0).any():
                cur = t[cur, ar]
                k += 1
                if k > n + 1:
                    raise AssertionError("element order exceeds group order")
                orders[(cur == e) & (orders == 0)] = k
            self._orders = orders
        return self._orders

    def power_indices(self, i: int) -> np.ndarray:
        o = int(self.order_array()[i])
        out = np.empty(o, dtype=np.int64)
        x = self.identity
        for k in range(o):
            out[k] = x
            x = self.table[x, i]
        return out

    def mul_row(self, i: int) -> np.ndarray:
        return self.table[i].astype(np.int64)

    def mul_col(self, i: int) -> np.ndarray:
        return self.table[:, i].astype(np.int64)


def dihedral_group(n: int) -> CayleyGroup:
    """D_n of order 2n; index j*n + i is r^i s^j."""
    i = np.arange(2 * n) % n
    j = np.arange(2 * n) // n
    sgn = np.where(j == 0, 1, -1)
    ri = (i[:, None] + sgn[:, None] * i[None, :]) % n
    sj = (j[:, None] + j[None, :]) % 2
    table = sj * n + ri
    coords = [(int(a), int(b)) for a, b in zip(i, j)]
    return CayleyGroup(table, identity=0, coords=coords, labels=[_dihedral_label(a, b) for a, b in coords], spec=f"D{n}")


def _dihedral_label(i: int, j: int) -> str:
    r = "" if i == 0 else ("r" if i == 1 else f"r^{i}")
    s = "s" if j else ""
    return " ".join(x for x in (r, s) if x) or "e"


def semidirect_group(n: int, m: int, g: int) -> CayleyGroup:
    """Z_n x| Z_m with (a1,a2)*(b1,b2) = (a1 + g^a2 * b1, a2 + b2); index a1*m + a2."""
    gpow = np.array([pow(g, k, n) for k in range(m)], dtype=np.int64)
    idx = np.arange(n * m)
    a1, a2 = idx // m, idx % m
    c1 = (a1[:, None] + gpow[a2][:, None] * a1[None, :]) % n
    c2 = (a2[:, None] + a2[None, :]) % m
    table = c1 * m + c2
    coords = [(int(x), int(y)) for x, y in zip(a1, a2)]
    return CayleyGroup(table, identity=0, coords=coords, labels=[f"({x},{y})" for x, y in coords], spec=f"sd(Z{n},Z{m},{g})")


def to_cayley(G: FiniteGroup) -> CayleyGroup:
    """Materialize the multiplication table of any enumerable group."""
    if isinstance(G, CayleyGroup):
        return G
    n = G.order
    table = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        table[i] = G.mul_row(i)
    elems = G.elements()
    return CayleyGroup(table, identity=G.index(G.identity), coords=elems, labels=[G.describe(x) for x in elems], spec=G.spec)


def direct_product_cayley(factors: Sequence[CayleyGroup], spec: str = "") -> CayleyGroup:
    """Cayley table of G1 x ... x Gk; index is row-major over factor indices."""
    table = np.zeros((1, 1), dtype=np.int64)
    ident = 0
    coords: list[tuple] = [()]
    labels: list[list[str]] = [[]]
    for F in factors:
        k = F.order
        t = F.table.astype(np.int64)
        n = table.shape[0]
        table = (table[:, None, :, None] * k + t[None, :, None, :]).reshape(n * k, n * k)
        ident = ident * k + F.identity
        fc = F.coords if F.coords is not None else list(range(k))
        fl = F.labels if F.labels is not None else [str(x) for x in range(k)]
        coords = [c + (x,) for c in coords for x in fc]
        labels = [lab + [y] for lab in labels for y in fl]
    return CayleyGroup(table, identity=ident, coords=coords, labels=["(" + ", ".join(lab) + ")" for lab in labels], spec=spec)
