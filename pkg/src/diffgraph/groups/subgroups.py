"""Subgroup lattice of small enumerable groups, as sets of dense indices."""

from __future__ import annotations

import numpy as np

from diffgraph.groups.base import FiniteGroup

SUBGROUP_ORDER_CAP = 2048


def generated_subgroup(G: FiniteGroup, gens: list[int]) -> frozenset[int]:
    """Dense indices of <gens>, by closing under right multiplication by generators."""
    members = np.zeros(G.order, dtype=bool)
    members[G.index(G.identity)] = True
    frontier = np.nonzero(members)[0]
    cols = [G.mul_col(g) for g in gens]
    while len(frontier):
        new = np.unique(np.concatenate([c[frontier] for c in cols])) if cols else np.zeros(0, dtype=np.int64)
        new = new[~members[new]]
        members[new] = True
        frontier = new
    return frozenset(np.nonzero(members)[0].tolist())


def cyclic_subgroups(G: FiniteGroup) -> list[frozenset[int]]:
    seen: dict[frozenset[int], None] = {}
    for i in range(G.order):
        seen.setdefault(frozenset(G.power_indices(i).tolist()))
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def all_subgroups(G: FiniteGroup) -> list[frozenset[int]]:
    """Every subgroup, via joins of cyclic subgroups until nothing new appears."""
    if G.order > SUBGROUP_ORDER_CAP:
        raise ValueError(f"subgroup enumeration limited to order {SUBGROUP_ORDER_CAP}")
    cyc = cyclic_subgroups(G)
    gen_of = {c: min(c, key=lambda i: (-int(G.order_array()[i]), i)) for c in cyc}
    found: dict[frozenset[int], list[int]] = {c: [gen_of[c]] for c in cyc}
    queue = list(found)
    while queue:
        nxt = []
        for h in queue:
            for c in cyc:
                if c <= h:
                    continue
                gens = found[h] + [gen_of[c]]
                j = generated_subgroup(G, gens)
                if j not in found:
                    found[j] = gens
                    nxt.append(j)
        queue = nxt
    return sorted(found, key=lambda s: (len(s), sorted(s)))


def proper_subgroups(G: FiniteGroup) -> list[frozenset[int]]:
    return [h for h in all_subgroups(G) if len(h) < G.order]
