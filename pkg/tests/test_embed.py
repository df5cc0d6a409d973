from itertools import combinations
from math import prod

import networkx as nx
import numpy as np
import pytest

from diffgraph.adjacency import diff_adjacent
from diffgraph.embed import embed_graph, embedding_to_dict, find_diff_neighbor, verify_embedding
from diffgraph.graphs.build import build_diff_graph
from diffgraph.graphs.graph import Graph
from diffgraph.groups import build_group
from diffgraph.perfect.holes import find_odd_hole

import oracles


def all_labeled_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(range(n), [p for k, p in enumerate(pairs) if mask >> k & 1])


def random_graphs(count: int, seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(5, 9))
        a = oracles.random_adjacency(rng, n, float(rng.uniform(0.15, 0.85)))
        u, v = np.nonzero(np.triu(a, k=1))
        yield Graph(range(n), np.stack([u, v], axis=1))


def _audit_order(g: Graph, emb) -> None:
    if g.n == 1:
        assert emb.group_order() == 6
        return
    assert len(set(emb.primes)) == len(emb.primes)
    assert emb.group_order() == prod(p * p for p in emb.primes)
    assert len(emb.primes) == g.n + (1 if g.m == 0 else 0)


def test_all_graphs_up_to_four_vertices():
    seen_types = set()
    for n in range(1, 5):
        for g in all_labeled_graphs(n):
            emb = embed_graph(g)
            rep = verify_embedding(emb, g)
            assert rep.ok, (g.edge_labels(), rep.mismatches, rep.isolated)
            _audit_order(g, emb)
            nxg = nx.Graph(g.edge_labels())
            nxg.add_nodes_from(g.labels)
            if n == 4:
                seen_types.add(nx.weisfeiler_lehman_graph_hash(nxg))
    assert len(seen_types) == 11


def test_seeded_random_graphs():
    for g in random_graphs(50, seed=2024):
        emb = embed_graph(g)
        rep = verify_embedding(emb, g)
        assert rep.ok and rep.pairs_checked == g.n * (g.n - 1) // 2
        _audit_order(g, emb)


def test_small_embeddings_against_oracle():
    # groups of order at most 900: check with the closure oracle and the graph builder
    for n in range(2, 4):
        for g in all_labeled_graphs(n):
            emb = embed_graph(g)
            G = emb.group()
            images = [G._wrap(emb.vertex_map[v]) for v in g.labels]
            for i, j in combinations(range(n), 2):
                assert oracles.naive_diff_adjacent(G, images[i], images[j]) == g.has_edge(i, j)
            d = build_diff_graph(G)
            assert all(d.has_vertex(x) for x in images)


def test_single_vertex_goes_to_z6():
    g = Graph(["v"])
    emb = embed_graph(g)
    assert emb.spec == "Z6" and emb.vertex_map["v"] == (2,)
    G = build_group("Z6")
    assert G.order_of(2) == 3 and build_diff_graph(G).has_vertex(2)
    assert verify_embedding(emb, g).ok


def test_two_isolated_vertices():
    g = Graph(["u", "v"])
    emb = embed_graph(g)
    G = emb.group()
    assert emb.padded
    assert not diff_adjacent(G, G._wrap(emb.vertex_map["u"]), G._wrap(emb.vertex_map["v"]))
    assert verify_embedding(emb, g).ok


def test_c5_embedding_holds_the_hole():
    g = Graph(range(5), [(i, (i + 1) % 5) for i in range(5)])
    emb = embed_graph(g)
    assert emb.primes == [2, 3, 5, 7, 11]
    assert verify_embedding(emb, g).ok
    G = emb.group()
    images = [G._wrap(emb.vertex_map[v]) for v in range(5)]
    edges = [(i, j) for i, j in combinations(range(5), 2) if diff_adjacent(G, images[i], images[j])]
    assert sorted(find_odd_hole(Graph(images, edges))) == sorted(images)


def test_triangle():
    g = Graph(range(3), [(0, 1), (1, 2), (0, 2)])
    assert verify_embedding(embed_graph(g), g).ok


def test_swapped_images_fail():
    g = Graph(["a", "b", "c"], [(0, 1)])  # an edge plus an isolated vertex
    emb = embed_graph(g)
    emb.vertex_map["b"], emb.vertex_map["c"] = emb.vertex_map["c"], emb.vertex_map["b"]
    rep = verify_embedding(emb, g)
    assert not rep.ok and rep.mismatches
    assert {frozenset(m[:2]) for m in rep.mismatches} <= {frozenset("ab"), frozenset("ac"), frozenset("bc")}


def test_duplicate_image_not_injective():
    g = Graph(["a", "b", "c"], [(0, 1), (1, 2)])
    emb = embed_graph(g)
    emb.vertex_map["c"] = emb.vertex_map["a"]
    assert not verify_embedding(emb, g).injective


def test_find_diff_neighbor():
    G = build_group("Z6")
    assert find_diff_neighbor(G, 2) == 3
    assert find_diff_neighbor(G, 1) is None and find_diff_neighbor(G, 0) is None


def test_limits_and_dict():
    with pytest.raises(ValueError):
        embed_graph(Graph([]))
    with pytest.raises(ValueError):
        embed_graph(Graph(range(13)))
    g = Graph(range(3), [(0, 1)])
    emb = embed_graph(g)
    d = embedding_to_dict(emb, verify_embedding(emb, g))
    assert d["group_order"] == str(emb.group_order()) and d["verification"]["ok"]
