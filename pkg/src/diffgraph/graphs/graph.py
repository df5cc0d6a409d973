from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Hashable, Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from diffgraph.graphs.unionfind import UnionFind

DENSE_LIMIT = 4096


class GraphCapError(ValueError):
    pass


def _normalize_edges(edges: Any, n: int) -> np.ndarray:
    e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if len(e) == 0:
        return np.zeros((0, 2), dtype=np.int64)
    if e.min() < 0 or e.max() >= n:
        raise ValueError("edge endpoint out of range")
    e = np.sort(e, axis=1)
    e = e[e[:, 0] != e[:, 1]]
    codes = np.unique(e[:, 0] * n + e[:, 1])
    return np.stack([codes // n, codes % n], axis=1)


class Graph:
    """Undirected simple graph on labeled vertices 0..n-1.

    Edges are kept as a sorted (m, 2) array with u < v; adjacency lists are
    CSR arrays and a dense boolean matrix is available up to DENSE_LIMIT
    vertices. Instances are treated as immutable.
    """

    def __init__(
        self,
        labels: Sequence[Hashable],
        edges: Any = (),
        meta: dict | None = None,
        element_index: Sequence[int] | None = None,
        descriptions: Sequence[str] | None = None,
    ):
        self.labels = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("vertex labels must be unique")
        self.n = len(self.labels)
        self.edges = _normalize_edges(edges, self.n)
        self.edges.setflags(write=False)
        self.meta = dict(meta or {})
        self.element_index = None if element_index is None else np.asarray(element_index, dtype=np.int64)
        # human-readable text per vertex (element descriptions for group graphs)
        self.descriptions = tuple(descriptions) if descriptions is not None else tuple(str(x) for x in self.labels)
        if len(self.descriptions) != self.n:
            raise ValueError("one description per vertex required")

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"<Graph n={self.n} m={self.m} {self.meta.get('kind', '')}>"

    @cached_property
    def _position(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    def position(self, label: Hashable) -> int:
        try:
            return self._position[label]
        except KeyError:
            raise KeyError(f"{label!r} is not a vertex") from None

    def has_vertex(self, label: Hashable) -> bool:
        return label in self._position

    @cached_property
    def _csr(self) -> tuple[np.ndarray, np.ndarray]:
        u = np.concatenate([self.edges[:, 0], self.edges[:, 1]])
        v = np.concatenate([self.edges[:, 1], self.edges[:, 0]])
        order = np.lexsort((v, u))
        u, v = u[order], v[order]
        indptr = np.zeros(self.n + 1, dtype=np.int64)
        np.add.at(indptr, u + 1, 1)
        return np.cumsum(indptr), v

    def neighbors(self, i: int) -> np.ndarray:
        indptr, indices = self._csr
        return indices[indptr[i]:indptr[i + 1]]

    @cached_property
    def adjacency_lists(self) -> list[list[int]]:
        indptr, indices = self._csr
        lst = indices.tolist()
        return [lst[indptr[i]:indptr[i + 1]] for i in range(self.n)]

    def degree(self) -> np.ndarray:
        return np.diff(self._csr[0])

    @cached_property
    def dense(self) -> np.ndarray:
        if self.n > DENSE_LIMIT:
            raise GraphCapError(f"dense matrix limited to {DENSE_LIMIT} vertices, graph has {self.n}")
        a = np.zeros((self.n, self.n), dtype=bool)
        a[self.edges[:, 0], self.edges[:, 1]] = True
        a[self.edges[:, 1], self.edges[:, 0]] = True
        a.setflags(write=False)
        return a

    @cached_property
    def bitsets(self) -> list[int]:
        """Neighborhood of each vertex as a Python int bitmask."""
        out = [0] * self.n
        for u, v in self.edges.tolist():
            out[u] |= 1 << v
            out[v] |= 1 << u
        return out

    def has_edge(self, u: int, v: int) -> bool:
        if self.n <= DENSE_LIMIT:
            return bool(self.dense[u, v])
        nb = self.neighbors(u)
        k = np.searchsorted(nb, v)
        return bool(k < len(nb) and nb[k] == v)

    def adjacent(self, a: Hashable, b: Hashable) -> bool:
        """Adjacency by label."""
        return self.has_edge(self.position(a), self.position(b))

    def edge_labels(self) -> list[tuple]:
        return [(self.labels[u], self.labels[v]) for u, v in self.edges.tolist()]

    def to_scipy(self) -> csr_matrix:
        data = np.ones(2 * self.m, dtype=np.int8)
        rows = np.concatenate([self.edges[:, 0], self.edges[:, 1]])
        cols = np.concatenate([self.edges[:, 1], self.edges[:, 0]])
        return csr_matrix((data, (rows, cols)), shape=(self.n, self.n))

    def same_edges(self, other: "Graph") -> bool:
        """Equal as labeled graphs (vertex sets and edge sets by label)."""
        return set(self.labels) == set(other.labels) and set(map(frozenset, self.edge_labels())) == set(
            map(frozenset, other.edge_labels())
        )


@dataclass
class ComponentReport:
    count: int
    components: list[list[Hashable]]
    component_positions: list[list[int]]
    paths: dict[tuple, list[Hashable] | None] = field(default_factory=dict)

    @property
    def connected(self) -> bool:
        return self.count == 1

    def sizes(self) -> list[int]:
        return [len(c) for c in self.components]


def connected_components(g: Graph, pairs: Iterable[tuple[Hashable, Hashable]] = ()) -> ComponentReport:
    """Components via union-find, ordered by their smallest vertex position.

    For each queried label pair a shortest path (label list) or None is recorded.
    """
    uf = UnionFind(g.n)
    for u, v in g.edges.tolist():
        uf.union(u, v)
    groups = uf.groups()
    report = ComponentReport(
        count=len(groups),
        components=[[g.labels[i] for i in grp] for grp in groups],
        component_positions=groups,
    )
    for a, b in pairs:
        d, path = distance(g, a, b)
        report.paths[(a, b)] = path
    return report


def bfs(g: Graph, source: int) -> tuple[np.ndarray, np.ndarray]:
    """Distances (-1 when unreachable) and BFS parents from ``source``."""
    adj = g.adjacency_lists
    dist = np.full(g.n, -1, dtype=np.int64)
    parent = np.full(g.n, -1, dtype=np.int64)
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        du = dist[u] + 1
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du
                parent[v] = u
                q.append(v)
    return dist, parent


def shortest_path_positions(g: Graph, s: int, t: int) -> list[int] | None:
    dist, parent = bfs(g, s)
    if dist[t] < 0:
        return None
    path = [t]
    while path[-1] != s:
        path.append(int(parent[path[-1]]))
    return path[::-1]


def distance(g: Graph, a: Hashable, b: Hashable) -> tuple[float, list[Hashable] | None]:
    """(distance, geodesic as labels); (math.inf, None) when disconnected."""
    path = shortest_path_positions(g, g.position(a), g.position(b))
    if path is None:
        return math.inf, None
    return len(path) - 1, [g.labels[i] for i in path]


@dataclass
class DiameterReport:
    value: float
    component_diameters: list[int]
    endpoints: tuple[Hashable, Hashable] | None
    geodesic: list[Hashable] | None

    @property
    def finite(self) -> bool:
        return not math.isinf(self.value)


def eccentricities(g: Graph, chunk: int = 512) -> np.ndarray:
    """Eccentricity of each vertex within its own component."""
    ecc = np.zeros(g.n, dtype=np.int64)
    if g.m == 0:
        return ecc
    mat = g.to_scipy()
    for start in range(0, g.n, chunk):
        idx = np.arange(start, min(g.n, start + chunk))
        d = shortest_path(mat, method="D", unweighted=True, directed=False, indices=idx)
        d[np.isinf(d)] = -1
        ecc[idx] = d.max(axis=1).astype(np.int64)
    return ecc


def diameter_report(g: Graph) -> DiameterReport:
    """Diameter with a geodesic certificate between two antipodal vertices.

    A disconnected graph has infinite diameter; per-component diameters are
    still reported, in component order.
    """
    if g.n == 0:
        return DiameterReport(0, [], None, None)
    comps = connected_components(g)
    ecc = eccentricities(g)
    per = [int(ecc[c].max()) for c in comps.component_positions]
    if comps.count > 1:
        return DiameterReport(math.inf, per, None, None)
    s = int(np.argmax(ecc))  # first vertex of maximal eccentricity
    dist, _ = bfs(g, s)
    t = int(np.argmax(dist))
    path = shortest_path_positions(g, s, t)
    return DiameterReport(per[0], per, (g.labels[s], g.labels[t]), [g.labels[i] for i in path])


def diameter(g: Graph) -> float:
    return diameter_report(g).value


def complement(g: Graph) -> Graph:
    if g.n > DENSE_LIMIT:
        raise GraphCapError(f"complement limited to {DENSE_LIMIT} vertices")
    a = ~g.dense
    u, v = np.nonzero(np.triu(a, k=1))
    return Graph(g.labels, np.stack([u, v], axis=1), meta={**g.meta, "complement": True}, element_index=g.element_index, descriptions=g.descriptions)


def induced_subgraph(g: Graph, vertices: Iterable[Hashable], by_label: bool = True) -> Graph:
    """Subgraph on the given vertices (labels by default), keeping vertex order of ``g``."""
    pos = sorted({g.position(v) if by_label else int(v) for v in vertices})
    remap = np.full(g.n, -1, dtype=np.int64)
    remap[pos] = np.arange(len(pos))
    keep = (remap[g.edges[:, 0]] >= 0) & (remap[g.edges[:, 1]] >= 0)
    e = remap[g.edges[keep]]
    ei = None if g.element_index is None else g.element_index[pos]
    return Graph(
        [g.labels[i] for i in pos], e, meta=dict(g.meta), element_index=ei, descriptions=[g.descriptions[i] for i in pos]
    )
