"""Pow(G), EPow(G) and D(G) from the cyclic subgroups of G.

Every EPow edge lies inside some maximal cyclic subgroup, and inside a cyclic
group two elements are powers of one another exactly when one order divides
the other. So D(G) is the union, over maximal cyclic subgroups <z>, of the
pairs of elements of <z> whose orders are incomparable under divisibility.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from diffgraph.graphs.graph import DENSE_LIMIT, Graph, GraphCapError
from diffgraph.groups.base import FiniteGroup

GRAPH_CAP = 50_000


def _check_cap(G: FiniteGroup, cap: int) -> None:
    if G.order > cap:
        raise GraphCapError(f"{G.spec}: {G.order} elements exceeds graph cap {cap}")


def maximal_cyclic_subgroups(G: FiniteGroup) -> list[np.ndarray]:
    """Power sequences (dense indices) of generators of the maximal cyclic subgroups.

    Elements are visited by decreasing order; an element not already inside a
    visited subgroup generates a new maximal one, since any strictly larger
    cyclic subgroup containing it would have been visited first.
    """
    G.require_enumerable()
    orders = G.order_array()
    covered = np.zeros(G.order, dtype=bool)
    out = []
    for x in np.argsort(-orders, kind="stable").tolist():
        if covered[x]:
            continue
        pw = G.power_indices(x)
        covered[pw] = True
        out.append(pw)
    return out


@lru_cache(maxsize=None)
def _incomparable_pairs(o: int) -> tuple[np.ndarray, np.ndarray]:
    """Exponent pairs (i, j), i < j < o, whose powers of an order-o generator have incomparable orders."""
    ks = np.arange(o)
    d = np.gcd(ks, o)  # order of z^k is o // d
    di, dj = d[:, None], d[None, :]
    mask = (di % dj != 0) & (dj % di != 0)
    i, j = np.nonzero(np.triu(mask, k=1))
    return i, j


@lru_cache(maxsize=None)
def _vertex_exponents(o: int) -> np.ndarray:
    i, j = _incomparable_pairs(o)
    return np.unique(np.concatenate([i, j]))


def _label_graph(G: FiniteGroup, idx: np.ndarray, edges: np.ndarray, kind: str) -> Graph:
    pos = np.full(G.order, -1, dtype=np.int64)
    pos[idx] = np.arange(len(idx))
    labels = [G.element(int(i)) for i in idx]
    return Graph(
        labels,
        pos[edges] if len(edges) else edges,
        meta={"group": G.spec, "kind": kind},
        element_index=idx,
        descriptions=[G.describe(x) for x in labels],
    )


def _unique_pairs(us: list[np.ndarray], vs: list[np.ndarray], n: int) -> np.ndarray:
    if not us:
        return np.zeros((0, 2), dtype=np.int64)
    u = np.concatenate(us)
    v = np.concatenate(vs)
    lo, hi = np.minimum(u, v), np.maximum(u, v)
    keep = lo != hi
    codes = np.unique(lo[keep] * n + hi[keep])
    return np.stack([codes // n, codes % n], axis=1)


def build_pow_graph(G: FiniteGroup, cap: int = GRAPH_CAP) -> Graph:
    """a ~ b iff one is a power of the other; one power walk per element."""
    _check_cap(G, cap)
    us, vs = [], []
    for x in range(G.order):
        pw = G.power_indices(x)
        us.append(np.full(len(pw), x, dtype=np.int64))
        vs.append(pw)
    edges = _unique_pairs(us, vs, G.order)
    return _label_graph(G, np.arange(G.order), edges, "pow")


def build_epow_graph(G: FiniteGroup, cap: int = GRAPH_CAP) -> Graph:
    """a ~ b iff both lie in a common cyclic subgroup; a clique per maximal cyclic subgroup."""
    _check_cap(G, cap)
    us, vs = [], []
    for pw in maximal_cyclic_subgroups(G):
        i, j = np.triu_indices(len(pw), k=1)
        us.append(pw[i])
        vs.append(pw[j])
    edges = _unique_pairs(us, vs, G.order)
    return _label_graph(G, np.arange(G.order), edges, "epow")


def diff_edges(G: FiniteGroup) -> np.ndarray:
    """Edges of EPow(G) - Pow(G) as sorted (u, v) dense index pairs, u < v."""
    us, vs = [], []
    for pw in maximal_cyclic_subgroups(G):
        i, j = _incomparable_pairs(len(pw))
        if len(i):
            us.append(pw[i])
            vs.append(pw[j])
    return _unique_pairs(us, vs, G.order)


def diff_vertex_mask(G: FiniteGroup) -> np.ndarray:
    """Which elements are vertices of D(G), without materializing any edges."""
    mask = np.zeros(G.order, dtype=bool)
    for pw in maximal_cyclic_subgroups(G):
        mask[pw[_vertex_exponents(len(pw))]] = True
    return mask


def build_diff_graph(G: FiniteGroup, cap: int = GRAPH_CAP) -> Graph:
    """D(G): the edge difference, restricted to elements with at least one difference edge."""
    _check_cap(G, cap)
    edges = diff_edges(G)
    idx = np.unique(edges) if len(edges) else np.zeros(0, dtype=np.int64)
    return _label_graph(G, idx, edges, "diff")


def build_graph(G: FiniteGroup, kind: str, cap: int = GRAPH_CAP) -> Graph:
    builders = {"pow": build_pow_graph, "epow": build_epow_graph, "diff": build_diff_graph}
    if kind not in builders:
        raise ValueError(f"unknown graph kind {kind!r}; expected one of {sorted(builders)}")
    return builders[kind](G, cap=cap)


__all__ = [
    "DENSE_LIMIT",
    "GRAPH_CAP",
    "build_diff_graph",
    "build_epow_graph",
    "build_graph",
    "build_pow_graph",
    "diff_edges",
    "diff_vertex_mask",
    "maximal_cyclic_subgroups",
]
