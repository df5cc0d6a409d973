"""Exact clique number and chromatic number by branch and bound.

Both work per connected component after merging false twins, which changes
neither number. Graphs above COLORING_LIMIT vertices are refused rather than
approximated, and a node budget turns runaway searches into an explicit error.
"""

from __future__ import annotations

import sys

from diffgraph.graphs.graph import Graph, connected_components, induced_subgraph
from diffgraph.perfect.holes import _bits, reduce_twins

COLORING_LIMIT = 2048
DEFAULT_NODE_BUDGET = 10**7


class ColoringRefused(RuntimeError):
    """Graph too large for the exact routines, or node budget exhausted."""


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _greedy_color_bound(nbr: list[int], cand: int) -> list[tuple[int, int]]:
    """Sequential greedy coloring of ``cand``: (vertex, color number) in nondecreasing color order."""
    out = []
    color = 0
    rest = cand
    while rest:
        color += 1
        avail = rest
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            rest &= ~low
            avail &= ~low & ~nbr[v]
            out.append((v, color))
    return out


def _max_clique_bits(nbr: list[int], budget: int) -> list[int]:
    best: list[int] = []
    nodes = 0

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise ColoringRefused(f"clique search exceeded {budget} nodes")
        order = _greedy_color_bound(nbr, cand)
        for v, color in reversed(order):
            if len(clique) + color <= len(best):
                return
            clique.append(v)
            new = cand & nbr[v]
            if new:
                expand(clique, new)
            elif len(clique) > len(best):
                best = clique[:]
            clique.pop()
            cand &= ~(1 << v)

    full = (1 << len(nbr)) - 1
    if nbr:
        expand([], full)
    return sorted(best)


def _pieces(g: Graph) -> list[Graph]:
    h = reduce_twins(g, kinds=("false",))
    return [induced_subgraph(h, c, by_label=False) for c in connected_components(h).component_positions]


def _check_size(g: Graph) -> None:
    if g.n > COLORING_LIMIT:
        raise ColoringRefused(f"exact coloring limited to {COLORING_LIMIT} vertices, graph has {g.n}")


def maximum_clique(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> list:
    """A maximum clique as vertex labels (empty for the empty graph)."""
    _check_size(g)
    best: list = []
    for piece in _pieces(g):
        c = _max_clique_bits(piece.bitsets, budget)
        if len(c) > len(best):
            best = [piece.labels[i] for i in c]
    return best


def clique_number(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> int:
    return len(maximum_clique(g, budget))


def _dsatur_greedy(nbr: list[int], n: int) -> list[int]:
    colors = [-1] * n
    sat = [0] * n  # bitmask of neighbour colors
    deg = [_popcount(x) for x in nbr]
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0), key=lambda u: (_popcount(sat[u]), deg[u], -u))
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in _bits(nbr[v]):
            sat[u] |= 1 << c
    return colors


def _chromatic_bits(nbr: list[int], lower: int, budget: int) -> list[int]:
    """Optimal coloring by DSATUR branch and bound, seeded with a greedy upper bound."""
    n = len(nbr)
    if n == 0:
        return []
    best = _dsatur_greedy(nbr, n)
    best_k = max(best) + 1
    if best_k <= lower:
        return best
    colors = [-1] * n
    nodes = 0
    # one frame per colored vertex
    sys.setrecursionlimit(max(sys.getrecursionlimit(), n + 200))

    def sat_of(v: int) -> int:
        s = 0
        for u in _bits(nbr[v]):
            if colors[u] >= 0:
                s |= 1 << colors[u]
        return s

    def search(colored: int, used: int) -> bool:
        nonlocal best, best_k, nodes
        nodes += 1
        if nodes > budget:
            raise ColoringRefused(f"coloring search exceeded {budget} nodes")
        if colored == n:
            best, best_k = colors[:], used
            return best_k <= lower
        v, vsat = -1, -1
        for u in range(n):
            if colors[u] < 0:
                s = _popcount(sat_of(u))
                if s > vsat:
                    v, vsat = u, s
        forbidden = sat_of(v)
        for c in range(min(used + 1, best_k - 1)):
            if forbidden >> c & 1:
                continue
            colors[v] = c
            if search(colored + 1, max(used, c + 1)):
                return True
            colors[v] = -1
        return False

    search(0, 0)
    return best


def chromatic_number(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> int:
    _check_size(g)
    if g.n == 0:
        return 0
    chi = 0
    for piece in _pieces(g):
        omega = len(_max_clique_bits(piece.bitsets, budget))
        col = _chromatic_bits(piece.bitsets, omega, budget)
        chi = max(chi, max(col) + 1 if col else 0)
    return chi


def clique_and_coloring(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> tuple[list[int], list[int]]:
    """A maximum clique and an optimal proper coloring, both by vertex position.

    When the coloring uses as many colors as the clique has vertices the pair
    certifies chi = omega without any search.
    """
    _check_size(g)
    nbr = g.bitsets
    # one pass of false-twin merging is already a fixed point
    rep: dict[int, int] = {}
    for v in range(g.n):
        rep.setdefault(nbr[v], v)
    kept = sorted(set(rep.values()))
    h = induced_subgraph(g, kept, by_label=False)
    colors = [0] * g.n
    clique: list[int] = []
    for comp in connected_components(h).component_positions:
        piece = induced_subgraph(h, comp, by_label=False)
        c = _max_clique_bits(piece.bitsets, budget)
        if len(c) > len(clique):
            clique = [kept[comp[i]] for i in c]
        col = _chromatic_bits(piece.bitsets, len(c), budget)
        for i, k in enumerate(col):
            colors[kept[comp[i]]] = k
    for v in range(g.n):
        colors[v] = colors[rep[nbr[v]]]
    return sorted(clique), colors
