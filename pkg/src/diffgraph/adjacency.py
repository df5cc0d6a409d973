"""Pairwise adjacency in Pow(G), EPow(G) and D(G) = EPow(G) - Pow(G)."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from diffgraph.groups.abelian import AbelianGroup
from diffgraph.groups.base import ElementId, FiniteGroup
from diffgraph.numtheory import prime_factors


@dataclass(frozen=True)
class AdjacencyVerdict:
    pow: bool
    epow: bool
    diff: bool


def _in_cyclic(G: FiniteGroup, a: ElementId, b: ElementId) -> bool:
    """a is a power of b."""
    if isinstance(G, AbelianGroup):
        return G.in_cyclic(a, b)
    if G.order_of(b) % G.order_of(a):
        return False
    return a in G.cyclic_subgroup(b)


def pow_adjacent(G: FiniteGroup, a: ElementId, b: ElementId) -> bool:
    if a == b:
        return False
    if G.order_of(a) <= G.order_of(b):
        return _in_cyclic(G, a, b) or _in_cyclic(G, b, a)
    return _in_cyclic(G, b, a) or _in_cyclic(G, a, b)


def is_cyclic_pair(G: FiniteGroup, a: ElementId, b: ElementId) -> bool:
    """Whether <a, b> is cyclic: commuting, and the abelian closure has an element of full order."""
    if not G.commute(a, b):
        return False
    if isinstance(G, AbelianGroup):
        return G.is_cyclic_pair(a, b)
    H = G.closure(a, b)
    return max(G.order_of(h) for h in H) == len(H)


def diff_adjacent(G: FiniteGroup, a: ElementId, b: ElementId, shortcuts: bool = True) -> bool:
    if a == b or not G.commute(a, b):
        return False
    if shortcuts:
        oa, ob = G.order_of(a), G.order_of(b)
        if oa == 1 or ob == 1:
            return False
        if gcd(oa, ob) == 1:
            return True
        pa, pb = prime_factors(oa), prime_factors(ob)
        if len(pa) == 1 and pa == pb:
            # <a,b> is an abelian p-group: either nested (power-adjacent) or non-cyclic
            return False
    return is_cyclic_pair(G, a, b) and not pow_adjacent(G, a, b)


def adjacency(G: FiniteGroup, a: ElementId, b: ElementId) -> AdjacencyVerdict:
    p = pow_adjacent(G, a, b)
    e = a != b and (p or is_cyclic_pair(G, a, b))
    return AdjacencyVerdict(pow=p, epow=e, diff=e and not p)


def validate_shortcuts(G: FiniteGroup, fraction: float = 0.01, seed: int = 0) -> list[tuple]:
    """Compare the shortcut path to the plain definition on a seeded sample of pairs.

    Returns the disagreeing pairs (empty when the kernel is sound).
    """
    n = G.order
    rng = random.Random(seed)
    total = n * (n - 1) // 2
    k = max(1, min(total, int(total * fraction)))
    bad = []
    for _ in range(k):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        a, b = G.element(i), G.element(j)
        if diff_adjacent(G, a, b) != diff_adjacent(G, a, b, shortcuts=False):
            bad.append((a, b))
    return bad
