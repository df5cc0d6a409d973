"""A strict order on V(D(G)) for nilpotent G with exactly two prime divisors.

Write |G| = p^s q^t with p < q. Each element factors uniquely as x = ab with a
in the Sylow p-subgroup and b in the Sylow q-subgroup; both parts are powers of
x, obtained through CRT exponents. Type I vertices have prime power order,
type II vertices have mixed order. The relation:

  1. type I, o(x1) a power of p and o(x2) a power of q: x1 -> x2
  2. type II: x1 -> x2 when <a2> < <a1> and <b1> < <b2>
  3. x1 type I of p-power order, x2 type II: x1 -> x2 when <a2> < <a1>
  4. x1 type I of q-power order, x2 type II: x2 -> x1 when <b2> < <b1>

Rule 2 requires both containments to be strict. With only one of them strict
(rule2="literal") the relation relates elements that are powers of each
other, e.g. (1,0,3) and (2,0,3) in Z4 x Z2 x Z9, and no longer matches D(G).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from diffgraph.graphs.build import build_diff_graph
from diffgraph.groups.base import FiniteGroup
from diffgraph.groups.properties import is_nilpotent, prime_divisors
from diffgraph.numtheory import factorize, solve_congruences

RULE2_VARIANTS = ("strict", "literal")


@dataclass
class ComparabilityOrder:
    group: str
    primes: tuple[int, int]
    vertices: list  # element ids, in D(G) vertex order
    types: list[str]  # "I" or "II"
    pairs: set[tuple[int, int]] = field(default_factory=set)  # (i, j) means vertices[i] -> vertices[j]
    rule2: str = "strict"

    def matrix(self) -> np.ndarray:
        n = len(self.vertices)
        r = np.zeros((n, n), dtype=bool)
        for i, j in self.pairs:
            r[i, j] = True
        return r

    def is_irreflexive(self) -> bool:
        return all(i != j for i, j in self.pairs)

    def antisymmetry_violation(self) -> tuple[int, int] | None:
        for i, j in sorted(self.pairs):
            if (j, i) in self.pairs:
                return i, j
        return None

    def transitivity_violation(self) -> tuple[int, int, int] | None:
        r = self.matrix()
        if not len(r):
            return None
        two = (r.astype(np.int32) @ r.astype(np.int32)) > 0
        bad = np.argwhere(two & ~r)
        if not len(bad):
            return None
        i, k = (int(x) for x in bad[0])
        j = int(np.nonzero(r[i] & r[:, k])[0][0])
        return i, j, k

    def comparability_edges(self) -> set[tuple[int, int]]:
        return {(min(i, j), max(i, j)) for i, j in self.pairs}


def _split_exponents(o: int, p: int, q: int) -> tuple[int, int]:
    """Exponents u, w with x^u the p-part and x^w the q-part of an element of order o."""
    pe = dict(factorize(o))
    ps, qt = p ** pe.get(p, 0), q ** pe.get(q, 0)
    u, _ = solve_congruences([(1, ps), (0, qt)])
    w, _ = solve_congruences([(0, ps), (1, qt)])
    return u % o if o > 1 else 0, w % o if o > 1 else 0


class _Subgroups:
    """Cyclic subgroups of G as frozensets of dense indices, keyed by a canonical generator."""

    def __init__(self, G: FiniteGroup):
        self.G = G
        self.cache: dict[int, frozenset] = {}

    def of(self, i: int) -> frozenset:
        s = self.cache.get(i)
        if s is None:
            s = frozenset(self.G.power_indices(i).tolist())
            self.cache[i] = s
        return s

    def strictly_below(self, i: int, j: int) -> bool:
        """<g_i> < <g_j>."""
        a, b = self.of(i), self.of(j)
        return len(a) < len(b) and a <= b

    def below(self, i: int, j: int) -> bool:
        a, b = self.of(i), self.of(j)
        return a <= b


def build_comparability_order(G: FiniteGroup, rule2: str = "strict") -> ComparabilityOrder:
    if rule2 not in RULE2_VARIANTS:
        raise ValueError(f"rule2 must be one of {RULE2_VARIANTS}")
    primes = prime_divisors(G)
    if len(primes) != 2:
        raise ValueError(f"{G.spec}: needs exactly two prime divisors, has {len(primes)}")
    if not is_nilpotent(G):
        raise ValueError(f"{G.spec}: group is not nilpotent")
    p, q = primes
    d = build_diff_graph(G)
    idx = d.element_index.tolist()
    orders = G.order_array()
    sub = _Subgroups(G)

    parts = []  # (kind, a index, b index), kind in "p", "q", "pq"
    for i in idx:
        o = int(orders[i])
        pw = G.power_indices(i)
        u, w = _split_exponents(o, p, q)
        a, b = int(pw[u]), int(pw[w])
        if o % p and o % q == 0:
            parts.append(("q", a, b))
        elif o % q and o % p == 0:
            parts.append(("p", a, b))
        else:
            parts.append(("pq", a, b))

    pairs: set[tuple[int, int]] = set()
    n = len(idx)
    for i in range(n):
        ki, ai, bi = parts[i]
        for j in range(n):
            if i == j:
                continue
            kj, aj, bj = parts[j]
            if ki == "p" and kj == "q":
                pairs.add((i, j))
            elif ki == "pq" and kj == "pq":
                if rule2 == "strict":
                    ok = sub.strictly_below(aj, ai) and sub.strictly_below(bi, bj)
                else:
                    ok = sub.below(aj, ai) and sub.below(bi, bj) and (
                        sub.strictly_below(aj, ai) or sub.strictly_below(bi, bj)
                    )
                if ok:
                    pairs.add((i, j))
            elif ki == "p" and kj == "pq":
                if sub.strictly_below(aj, ai):
                    pairs.add((i, j))
            elif ki == "q" and kj == "pq":
                if sub.strictly_below(bj, bi):
                    pairs.add((j, i))
    return ComparabilityOrder(
        group=G.spec,
        primes=(p, q),
        vertices=[G.element(i) for i in idx],
        types=["I" if k in ("p", "q") else "II" for k, _, _ in parts],
        pairs=pairs,
        rule2=rule2,
    )


@dataclass
class ComparabilityReport:
    matches: bool
    irreflexive: bool
    antisymmetry_violation: tuple | None
    transitivity_violation: tuple | None
    missing: list  # D edges not comparable, as element id pairs
    extra: list  # comparable pairs that are not D edges

    @property
    def ok(self) -> bool:
        return self.matches and self.irreflexive and self.antisymmetry_violation is None and self.transitivity_violation is None


def comparability_report(G: FiniteGroup, rule2: str = "strict") -> ComparabilityReport:
    order = build_comparability_order(G, rule2)
    d = build_diff_graph(G)
    dedges = {tuple(e) for e in d.edges.tolist()}
    cedges = order.comparability_edges()
    v = order.vertices
    anti = order.antisymmetry_violation()
    trans = order.transitivity_violation()
    return ComparabilityReport(
        matches=dedges == cedges,
        irreflexive=order.is_irreflexive(),
        antisymmetry_violation=None if anti is None else tuple(v[k] for k in anti),
        transitivity_violation=None if trans is None else tuple(v[k] for k in trans),
        missing=[(v[i], v[j]) for i, j in sorted(dedges - cedges)],
        extra=[(v[i], v[j]) for i, j in sorted(cedges - dedges)],
    )


def comparability_matches_diff(G: FiniteGroup, rule2: str = "strict") -> bool:
    return comparability_report(G, rule2).matches
