"""Odd-hole search and perfectness verdicts.

A hole is an induced cycle of length at least 5. Searching works on Python
int bitsets: a cycle is enumerated from its smallest vertex v0 as an induced
path v0, v1, ..., with v1 < v_last so every cycle is met exactly once. Lengths
are tried in increasing order, so the first hole found is a shortest one and,
among those, the lexicographically first in DFS order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable

import networkx as nx

from diffgraph.graphs.graph import DENSE_LIMIT, Graph, GraphCapError, complement, induced_subgraph

DEFAULT_BUDGET = 10**8
DEFAULT_MAX_LEN = 11
UNBOUNDED_LIMIT = 64


class SearchBudgetExceeded(RuntimeError):
    pass


@dataclass
class HoleSearch:
    """Outcome of a search: a hole, or the largest length exhausted without one.

    ``exhausted`` is the largest odd length L such that every odd hole of
    length <= L was ruled out. ``complete`` means no odd hole exists at all.
    """

    hole: list[int] | None
    exhausted: int
    complete: bool
    expansions: int
    budget_hit: bool = False


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _distance_layers(nbr: list[int], v0: int, allowed: int) -> list[int]:
    """within[r] = vertices of ``allowed`` at distance <= r from v0 inside allowed | {v0}."""
    seen = 1 << v0
    frontier = seen
    within = [seen]
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= nbr[v]
        nxt &= allowed & ~seen
        if not nxt:
            break
        seen |= nxt
        within.append(seen)
        frontier = nxt
    return within


def _completion_distance(nbr: list[int], start: int, walkable: int, targets: int) -> int | None:
    """Edges on a shortest walk from ``start`` through ``walkable`` to ``targets``; None if unreachable."""
    if nbr[start] & targets:
        return 1
    seen = 1 << start
    frontier = 1 << start
    d = 0
    reach = walkable | targets
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= nbr[v]
        nxt &= reach & ~seen
        if nxt & targets:
            return d
        seen |= nxt
        frontier = nxt
    return None


def search_odd_hole(
    nbr: list[int],
    max_len: int | None = None,
    min_len: int = 5,
    budget: int = DEFAULT_BUDGET,
) -> HoleSearch:
    """Shortest odd hole in the graph given by neighbour bitmasks.

    A partial path is abandoned when no walk through still-usable vertices can
    lead back to a neighbour of v0, and postponed to a longer length when the
    shortest such walk is too long for the current one.
    """
    n = len(nbr)
    cap = n if max_len is None else min(max_len, n)
    full = (1 << n) - 1
    expansions = 0
    exhausted = min_len - 2
    L = min_len
    while L <= cap:
        extendable = False
        for v0 in range(n):
            allowed = full & ~((1 << (v0 + 1)) - 1)
            closed0 = nbr[v0] | (1 << v0)
            path = [v0]

            def candidates(k: int, blocked: int) -> int:
                # choose position k + 1 given path[0..k]
                nonlocal extendable
                base = nbr[path[k]] & allowed & ~blocked
                if k == 0:
                    return base & nbr[v0]
                if k + 1 == L - 1:
                    if base & ~closed0:
                        extendable = True
                    return base & nbr[v0] & ~((1 << (path[1] + 1)) - 1)
                return base & ~closed0

            stack = [(_bits(candidates(0, 0)), 0)]
            while stack:
                it, blocked = stack[-1]
                v = next(it, None)
                if v is None:
                    stack.pop()
                    path.pop()
                    continue
                expansions += 1
                if expansions > budget:
                    return HoleSearch(None, exhausted, False, expansions, budget_hit=True)
                k = len(path)
                if k == L - 1:
                    path.append(v)
                    return HoleSearch(path, L - 2, False, expansions)
                # interior vertices v1..v_{k-1} block their closed neighbourhoods
                nb = blocked | ((nbr[path[k - 1]] | (1 << path[k - 1])) if k >= 2 else 0)
                if k >= 1:
                    lo = path[1] if k > 1 else v
                    targets = nbr[v0] & allowed & ~nb & ~((1 << (lo + 1)) - 1) & ~(1 << v)
                    walkable = allowed & ~nb & ~closed0 & ~(1 << v)
                    d = _completion_distance(nbr, v, walkable, targets)
                    if d is None:
                        continue
                    if k + d > L - 1:
                        extendable = True
                        continue
                path.append(v)
                stack.append((_bits(candidates(k, nb)), nb))
        exhausted = L
        if not extendable:
            return HoleSearch(None, exhausted, True, expansions)
        L += 2
    return HoleSearch(None, exhausted, cap >= n, expansions)


def check_hole(g: Graph, cycle: list[int]) -> tuple[bool, str]:
    """Verify an induced odd cycle of length >= 5 given as vertex positions."""
    k = len(cycle)
    if k < 5 or k % 2 == 0:
        return False, f"length {k} is not an odd number >= 5"
    if len(set(cycle)) != k:
        return False, "repeated vertex"
    for i in range(k):
        for j in range(i + 1, k):
            adj = g.has_edge(cycle[i], cycle[j])
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if adj != consecutive:
                what = "missing cycle edge" if consecutive else "chord"
                return False, f"{what} between positions {i} and {j}"
    return True, "ok"


def find_odd_hole(g: Graph, max_len: int | None = None, budget: int = DEFAULT_BUDGET) -> list[Hashable] | None:
    """Shortest odd hole (as vertex labels) up to ``max_len``; None if absent up to the bound.

    Raises SearchBudgetExceeded instead of returning a silent absence.
    """
    if max_len is not None and (max_len < 5 or max_len % 2 == 0):
        raise ValueError("max_len must be odd and >= 5, or None for unbounded")
    res = search_odd_hole(g.bitsets, max_len=max_len, budget=budget)
    if res.budget_hit:
        raise SearchBudgetExceeded(f"hole search exceeded {budget} expansions (exhausted up to length {res.exhausted})")
    if res.hole is None:
        return None
    return [g.labels[i] for i in res.hole]


# -- twin reduction ---------------------------------------------------------


def twin_classes(g: Graph, kind: str = "false") -> list[list[int]]:
    """Classes of false twins (equal open neighbourhoods) or true twins (equal closed ones).

    Classes are sorted by smallest member, which serves as representative.
    """
    if kind not in ("false", "true"):
        raise ValueError("kind must be 'false' or 'true'")
    nbr = g.bitsets
    cls: dict[int, list[int]] = {}
    for v in range(g.n):
        key = nbr[v] if kind == "false" else nbr[v] | (1 << v)
        cls.setdefault(key, []).append(v)
    return sorted(cls.values(), key=lambda grp: grp[0])


def reduce_twins(g: Graph, kinds: tuple[str, ...] = ("false", "true")) -> Graph:
    """Induced subgraph on twin-class representatives, iterated to a fixed point.

    Removing a twin keeps every odd hole and odd antihole (a hole of length
    >= 5 never contains two twins, and a twin can stand in for its partner).
    False-twin removal alone also keeps the clique and chromatic numbers.
    """
    cur = g
    changed = True
    while changed:
        changed = False
        for kind in kinds:
            reps = [grp[0] for grp in twin_classes(cur, kind)]
            if len(reps) < cur.n:
                cur = induced_subgraph(cur, reps, by_label=False)
                changed = True
    return cur


# -- verdicts ---------------------------------------------------------------


@dataclass
class PerfectVerdict:
    status: str  # perfect | imperfect | bounded-perfect
    witness: list[Hashable] | None = None
    witness_descriptions: list[str] | None = None
    in_complement: bool = False
    bound: int | None = None
    stats: dict = field(default_factory=dict)

    @property
    def perfect(self) -> bool | None:
        return {"perfect": True, "imperfect": False}.get(self.status)

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "witness": self.witness_descriptions,
            "in_complement": self.in_complement,
            "bound": self.bound,
            "stats": dict(sorted(self.stats.items())),
        }


def blocks(g: Graph) -> list[list[int]]:
    """Vertex sets (sorted positions) of the biconnected components with at least 5 vertices.

    Odd holes and odd antiholes of length >= 5 are 2-connected, so each one
    sits inside a single block; smaller blocks cannot hold one.
    """
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges.tolist())
    out = [sorted(b) for b in nx.biconnected_components(nxg) if len(b) >= 5]
    return sorted(out)


def _search_piece(h: Graph, max_len: int | None, budget: int) -> tuple[list, int]:
    """Search one block and its complement; returns (results, expansions)."""
    h = reduce_twins(h)
    bound = max_len
    if bound is None and h.n > UNBOUNDED_LIMIT:
        bound = DEFAULT_MAX_LEN
    results = []
    used = 0
    for in_comp, graph in ((False, h), (True, complement(h))):
        res = search_odd_hole(graph.bitsets, max_len=bound, budget=budget - used)
        used += res.expansions
        results.append((in_comp, graph, res))
        if res.hole is not None or res.budget_hit:
            break
    return results, used


def is_perfect(g: Graph, max_len: int | None = None, budget: int = DEFAULT_BUDGET) -> PerfectVerdict:
    """Perfect iff neither the graph nor its complement has an odd hole.

    Twins are merged, then every block (biconnected component) with at least
    5 vertices is searched on its own, together with its complement. A block
    of at most 64 vertices (after twin merging) is searched without a length
    bound; larger ones up to ``max_len`` (default 11), and an exhausted bound
    yields ``bounded-perfect``. Among several holes the shortest is reported,
    ties going to the first block.
    """
    if g.n > DENSE_LIMIT:
        raise GraphCapError(f"perfectness needs the complement; {g.n} vertices exceeds {DENSE_LIMIT}")
    h = reduce_twins(g)
    parts = blocks(h)
    stats = {"vertices": g.n, "edges": g.m, "reduced_vertices": h.n, "blocks": len(parts)}
    total = 0
    best = None
    open_bounds = []
    budget_hit = False
    for part in parts:
        results, used = _search_piece(induced_subgraph(h, part, by_label=False), max_len, budget - total)
        total += used
        for in_comp, graph, res in results:
            if res.hole is not None:
                key = (len(res.hole), in_comp)
                if best is None or key < best[0]:
                    best = (key, graph, res.hole, in_comp)
            elif res.budget_hit:
                budget_hit = True
                open_bounds.append(res.exhausted)
            elif not res.complete:
                open_bounds.append(res.exhausted)
        if budget_hit:
            break
    stats["expansions"] = total
    if best is not None:
        _, graph, hole, in_comp = best
        return PerfectVerdict(
            "imperfect",
            witness=[graph.labels[i] for i in hole],
            witness_descriptions=[graph.descriptions[i] for i in hole],
            in_complement=in_comp,
            bound=max_len,
            stats=stats,
        )
    if budget_hit:
        stats["budget_hit"] = True
    if open_bounds:
        return PerfectVerdict("bounded-perfect", bound=min(open_bounds), stats=stats)
    return PerfectVerdict("perfect", bound=None, stats=stats)
