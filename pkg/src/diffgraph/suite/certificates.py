"""Independent checkers for the certificates attached to check results.

Everything here re-derives adjacency from the plain definition
(``diff_adjacent(..., shortcuts=False)``) and never looks at a prebuilt graph,
so a certificate is validated without trusting the search that produced it.
Elements are referred to by their description strings, as in the JSON report.
Each checker returns (ok, message).
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from itertools import combinations
from typing import Any, Sequence

import numpy as np

from diffgraph.adjacency import diff_adjacent
from diffgraph.graphs.unionfind import UnionFind
from diffgraph.groups.base import FiniteGroup
from diffgraph.groups.build import build_group

Result = tuple[bool, str]


class Lookup:
    """Two-way map between element descriptions and elements of one group."""

    def __init__(self, G: FiniteGroup):
        self.G = G
        self.elements = G.elements()
        self.by_text = {G.describe(x): x for x in self.elements}
        if len(self.by_text) != G.order:
            raise ValueError(f"{G.spec}: element descriptions are not unique")

    def __call__(self, text: str) -> Any:
        try:
            return self.by_text[text]
        except KeyError:
            raise KeyError(f"{self.G.spec}: no element described as {text!r}") from None


@lru_cache(maxsize=8)
def lookup_for(spec: str) -> Lookup:
    return Lookup(build_group(spec))


def _adj(G: FiniteGroup, a: Any, b: Any) -> bool:
    return diff_adjacent(G, a, b, shortcuts=False)


def verify_edge(spec: str, a: str, b: str) -> Result:
    lk = lookup_for(spec)
    ok = _adj(lk.G, lk(a), lk(b))
    return ok, "" if ok else f"{a} and {b} are not adjacent in D({spec})"


def verify_path(spec: str, path: Sequence[str], length: int | None = None) -> Result:
    """A walk of distinct vertices with every consecutive pair adjacent."""
    lk = lookup_for(spec)
    if len(set(path)) != len(path):
        return False, "path repeats a vertex"
    if length is not None and len(path) - 1 != length:
        return False, f"path has length {len(path) - 1}, expected {length}"
    for a, b in zip(path, path[1:]):
        if not _adj(lk.G, lk(a), lk(b)):
            return False, f"{a} and {b} are not adjacent"
    return True, ""


def verify_hole(spec: str, cycle: Sequence[str]) -> Result:
    """An induced cycle of odd length at least 5."""
    lk = lookup_for(spec)
    k = len(cycle)
    if k < 5 or k % 2 == 0:
        return False, f"cycle length {k} is not odd and at least 5"
    if len(set(cycle)) != k:
        return False, "cycle repeats a vertex"
    xs = [lk(c) for c in cycle]
    for i, j in combinations(range(k), 2):
        consecutive = j - i == 1 or (i == 0 and j == k - 1)
        if _adj(lk.G, xs[i], xs[j]) != consecutive:
            what = "missing edge" if consecutive else "chord"
            return False, f"{what} between {cycle[i]} and {cycle[j]}"
    return True, ""


def verify_spanning_tree(spec: str, vertices: Sequence[str], tree: Sequence[Sequence[str]]) -> Result:
    """``tree`` is a set of D-edges connecting all of ``vertices`` without cycles."""
    lk = lookup_for(spec)
    pos = {v: i for i, v in enumerate(vertices)}
    if len(tree) != len(vertices) - 1:
        return False, f"{len(tree)} tree edges for {len(vertices)} vertices"
    uf = UnionFind(len(vertices))
    for a, b in tree:
        if a not in pos or b not in pos:
            return False, f"tree edge {a}-{b} leaves the vertex set"
        if not _adj(lk.G, lk(a), lk(b)):
            return False, f"tree edge {a}-{b} is not a D-edge"
        if not uf.union(pos[a], pos[b]):
            return False, f"tree edge {a}-{b} closes a cycle"
    return True, ""


def _centralizer(G: FiniteGroup, i: int) -> np.ndarray:
    return np.nonzero(G.mul_row(i) == G.mul_col(i))[0]


def d_neighbors(G: FiniteGroup, x: Any) -> list[Any]:
    """All D-neighbours of x, scanning only its centralizer (non-commuting pairs are never adjacent)."""
    out = []
    for j in _centralizer(G, G.index(x)).tolist():
        y = G.element(j)
        if y != x and _adj(G, x, y):
            out.append(y)
    return out


def verify_isolated(spec: str, elements: Sequence[str]) -> Result:
    """None of the elements has a D-neighbour in the whole group."""
    lk = lookup_for(spec)
    for text in elements:
        nb = d_neighbors(lk.G, lk(text))
        if nb:
            return False, f"{text} is adjacent to {lk.G.describe(nb[0])}"
    return True, ""


def verify_components(spec: str, components: Sequence[Sequence[str]], trees: Sequence[Sequence[Sequence[str]]] | None = None) -> Result:
    """The components partition V(D(G)) exactly.

    Checks that no D-edge joins two different listed components, that every
    element outside them is isolated, and (when trees are given) that each
    component is connected.
    """
    lk = lookup_for(spec)
    G = lk.G
    comp_of: dict[Any, int] = {}
    for k, comp in enumerate(components):
        for text in comp:
            x = lk(text)
            if x in comp_of:
                return False, f"{text} listed twice"
            comp_of[x] = k
    for x in lk.elements:
        nb = d_neighbors(G, x)
        k = comp_of.get(x)
        if k is None:
            if nb:
                return False, f"{G.describe(x)} is a vertex but is not listed"
            continue
        if not nb:
            return False, f"{G.describe(x)} is listed but isolated"
        for y in nb:
            if comp_of.get(y) != k:
                return False, f"edge {G.describe(x)}-{G.describe(y)} crosses components"
    if trees is not None:
        for comp, tree in zip(components, trees):
            ok, msg = verify_spanning_tree(spec, comp, tree)
            if not ok:
                return False, msg
    return True, ""


def verify_bfs_layers(spec: str, layers: Sequence[Sequence[str]]) -> Result:
    """Layer k is exactly the set of vertices at distance k from the single vertex of layer 0.

    Certifies every distance from the source and hence its eccentricity.
    """
    lk = lookup_for(spec)
    G = lk.G
    if len(layers) == 0 or len(layers[0]) != 1:
        return False, "layer 0 must hold exactly the source"
    level: dict[Any, int] = {}
    for k, layer in enumerate(layers):
        for text in layer:
            x = lk(text)
            if x in level:
                return False, f"{text} appears in two layers"
            level[x] = k
    for x, k in level.items():
        nb = d_neighbors(G, x)
        if k > 0 and not any(level.get(y) == k - 1 for y in nb):
            return False, f"{G.describe(x)} in layer {k} has no neighbour in layer {k - 1}"
        for y in nb:
            if y not in level or abs(level[y] - k) > 1:
                return False, f"edge {G.describe(x)}-{G.describe(y)} skips a layer"
    return True, ""


def bfs_layers(adj: list[list[int]], source: int) -> list[list[int]]:
    """BFS layers (vertex positions, sorted) of the component of ``source``."""
    dist = {source: 0}
    q = deque([source])
    while q:
        u = q.popleft()
        for v in adj[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                q.append(v)
    layers: list[list[int]] = [[] for _ in range(max(dist.values()) + 1)]
    for v, d in dist.items():
        layers[d].append(v)
    return [sorted(x) for x in layers]


def verify_clique(spec: str, clique: Sequence[str]) -> Result:
    lk = lookup_for(spec)
    xs = [lk(c) for c in clique]
    for (i, a), (j, b) in combinations(enumerate(xs), 2):
        if not _adj(lk.G, a, b):
            return False, f"{clique[i]} and {clique[j]} are not adjacent"
    return True, ""


def verify_coloring(spec: str, vertices: Sequence[str], colors: Sequence[int]) -> Result:
    """A proper coloring of D(G): no D-edge inside a color class, and every vertex of D(G) colored."""
    lk = lookup_for(spec)
    G = lk.G
    if len(vertices) != len(colors):
        return False, "one color per vertex required"
    color = {lk(v): c for v, c in zip(vertices, colors)}
    for x in lk.elements:
        nb = d_neighbors(G, x)
        if x not in color:
            if nb:
                return False, f"vertex {G.describe(x)} is not colored"
            continue
        for y in nb:
            if color.get(y) == color[x]:
                return False, f"{G.describe(x)} and {G.describe(y)} share color {color[x]}"
    return True, ""
