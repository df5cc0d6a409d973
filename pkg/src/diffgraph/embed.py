"""Realize any finite graph as an induced subgraph of D(G) for an abelian G.

One prime block Z_p x Z_p = <a> x <b> is added per vertex, with a fresh prime
each time. Vertices are processed in a fixed order v_1, ..., v_n; vertex v_j
gets

  block k < j : e           block j : b
  block k > j : a if v_j and v_k are non-adjacent, e if adjacent

Two images then generate a cyclic group exactly when the later vertex has e in
the earlier one's block, and neither is ever a power of the other, so the
adjacency of Γ is reproduced. Each image must also be a vertex of D(G), which
holds as soon as it has a trivial block; only v_1 can lack one. So v_1 is
chosen among the non-isolated vertices of Γ, and an edgeless Γ on n >= 2
vertices gets one extra block that is trivial for every image. A one-vertex
Γ is mapped to 2 in Z6.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Hashable

from diffgraph.adjacency import diff_adjacent
from diffgraph.graphs.graph import Graph
from diffgraph.groups.abelian import AbelianGroup
from diffgraph.numtheory import first_primes, prime_factors

MAX_EMBED_VERTICES = 12


@dataclass
class Embedding:
    primes: list[int]
    moduli: list[int]
    order: list[Hashable]  # construction order of the vertices
    vertex_map: dict  # label -> element (tuple of residues)
    padded: bool = False

    @property
    def spec(self) -> str:
        return " x ".join(f"Z{m}" for m in self.moduli)

    def group(self) -> AbelianGroup:
        return AbelianGroup(self.moduli, spec=self.spec)

    def group_order(self) -> int:
        out = 1
        for m in self.moduli:
            out *= m
        return out


def _construction_order(g: Graph) -> list[int]:
    deg = g.degree()
    first = next((i for i in range(g.n) if deg[i] > 0), 0)
    return [first] + [i for i in range(g.n) if i != first]


def embed_graph(g: Graph, max_vertices: int = MAX_EMBED_VERTICES) -> Embedding:
    if g.n == 0:
        raise ValueError("cannot embed the graph with no vertices")
    if g.n > max_vertices:
        raise ValueError(f"embedding limited to {max_vertices} vertices, graph has {g.n}")
    if g.n == 1:
        return Embedding(primes=[2, 3], moduli=[6], order=[g.labels[0]], vertex_map={g.labels[0]: (2,)})
    order = _construction_order(g)
    padded = g.m == 0
    primes = first_primes(g.n + (1 if padded else 0))
    blocks = len(primes)
    images = {}
    for j, v in enumerate(order):
        coords: list[int] = []
        for k in range(blocks):
            if k < j:
                coords += [0, 0]
            elif k == j:
                coords += [0, 1]  # b
            elif k < g.n and not g.has_edge(v, order[k]):
                coords += [1, 0]  # a
            else:
                coords += [0, 0]  # e
        images[g.labels[v]] = tuple(coords)
    moduli = [p for p in primes for _ in range(2)]
    return Embedding(primes=primes, moduli=moduli, order=[g.labels[v] for v in order], vertex_map=images, padded=padded)


def find_diff_neighbor(G: AbelianGroup, x: Any) -> Any | None:
    """A difference-neighbour of x in G, or None when x is isolated.

    x has one iff for some prime p of |G| its p-part x_p is a p-th power (or
    trivial) while o(x) has another prime q. Then any w of p-power order with
    w^p = x_p (order p when x_p = e) is adjacent to x.
    """
    ox = G.order_of(x)
    for p in prime_factors(G.order):
        if not [q for q in prime_factors(ox) if q != p]:
            continue
        xp = G.prime_part(x, p)
        w = []
        for c, m in zip(G._tuple(xp), G.moduli):
            if m % p:
                w.append(c * pow(p, -1, m) % m)
            elif c % p:
                break
            else:
                w.append(c // p)
        else:
            if xp == G.identity:
                i = next(i for i, m in enumerate(G.moduli) if m % p == 0)
                w = [0] * len(G.moduli)
                w[i] = G.moduli[i] // p
            cand = G.prime_part(G._wrap(w), p)
            if diff_adjacent(G, x, cand):
                return cand
    return None


@dataclass
class EmbeddingReport:
    ok: bool
    injective: bool
    mismatches: list = field(default_factory=list)  # (u, v, edge in graph, adjacent in D(G))
    isolated: list = field(default_factory=list)  # labels whose image has no difference-neighbour
    neighbors: dict = field(default_factory=dict)  # label -> witness neighbour of its image
    pairs_checked: int = 0

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "injective": self.injective,
            "pairs_checked": self.pairs_checked,
            "mismatches": [[str(u), str(v), e, a] for u, v, e, a in self.mismatches],
            "isolated": [str(v) for v in self.isolated],
            "neighbors": {str(k): list(v) if isinstance(v, tuple) else v for k, v in self.neighbors.items()},
        }


def verify_embedding(emb: Embedding, g: Graph) -> EmbeddingReport:
    """Check injectivity, edge <=> D-adjacency for every pair, and that no image is isolated in D(G)."""
    G = emb.group()
    images = [emb.vertex_map[lab] for lab in g.labels]
    wrapped = [G._wrap(x) for x in images]
    injective = len(set(images)) == len(images)
    rep = EmbeddingReport(ok=False, injective=injective)
    for i, j in combinations(range(g.n), 2):
        edge = g.has_edge(i, j)
        adj = diff_adjacent(G, wrapped[i], wrapped[j])
        rep.pairs_checked += 1
        if edge != adj:
            rep.mismatches.append((g.labels[i], g.labels[j], edge, adj))
    for lab, x in zip(g.labels, wrapped):
        y = find_diff_neighbor(G, x)
        if y is None:
            rep.isolated.append(lab)
        else:
            rep.neighbors[lab] = y
    rep.ok = injective and not rep.mismatches and not rep.isolated
    return rep


def embedding_to_dict(emb: Embedding, report: EmbeddingReport | None = None) -> dict:
    out = {
        "primes": emb.primes,
        "factor_moduli": emb.moduli,
        "group": emb.spec,
        "group_order": str(emb.group_order()),
        "construction_order": [str(v) for v in emb.order],
        "padded": emb.padded,
        "vertex_map": {str(k): list(v) for k, v in emb.vertex_map.items()},
    }
    if report is not None:
        out["verification"] = report.to_dict()
    return out
