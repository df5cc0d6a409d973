"""Command-line front end: group info, graph export, analysis, the check suite and embeddings."""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from diffgraph.embed import embed_graph, embedding_to_dict, verify_embedding
from diffgraph.graphs.build import build_diff_graph, build_graph
from diffgraph.graphs.export import FORMATS, read_graph, render
from diffgraph.graphs.graph import connected_components, diameter_report
from diffgraph.groups.base import GroupCapError
from diffgraph.groups.build import build_group
from diffgraph.groups.io import CayleyTableError
from diffgraph.groups.properties import center_size, is_eppo, is_nilpotent, is_p_group, prime_divisors
from diffgraph.groups.spec import SpecError
from diffgraph.perfect.coloring import ColoringRefused, clique_and_coloring
from diffgraph.perfect.holes import SearchBudgetExceeded, is_perfect
from diffgraph.suite.runner import exit_code, render_report, run_suite

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


def positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def hole_bound(text: str) -> int:
    v = positive_int(text)
    if v < 5 or v % 2 == 0:
        raise argparse.ArgumentTypeError(f"hole bound must be odd and at least 5, got {v}")
    return v


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _dump(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=1) + "\n"


# -- subcommands ----------------------------------------------------------------


def group_info(spec: str) -> dict:
    G = build_group(spec)
    return {
        "group": G.spec,
        "backend": G.backend,
        "order": G.order,
        "primes": list(prime_divisors(G)),
        "center_size": center_size(G),
        "nilpotent": is_nilpotent(G),
        "p_group": is_p_group(G),
        "eppo": is_eppo(G),
        "element_orders": {str(k): v for k, v in G.order_histogram().items()},
    }


def cmd_info(args: argparse.Namespace) -> int:
    info = group_info(args.spec)
    if args.json:
        _emit(_dump(info), args.out)
        return EXIT_OK
    yes = {True: "yes", False: "no"}
    hist = ", ".join(f"{k}:{v}" for k, v in info["element_orders"].items())
    lines = [
        f"group      {info['group']}  ({info['backend']})",
        f"order      {info['order']}",
        f"primes     {' '.join(map(str, info['primes'])) or '-'}",
        f"|Z(G)|     {info['center_size']}",
        f"nilpotent  {yes[info['nilpotent']]}",
        f"p-group    {yes[info['p_group']]}",
        f"EPPO       {yes[info['eppo']]}",
        f"orders     {{{hist}}}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    G = build_group(args.spec)
    g = build_graph(G, args.kind)
    text = render(g, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        print(f"{args.kind}({G.spec}): {g.n} vertices, {g.m} edges -> {args.out}")
    else:
        sys.stdout.write(text)
        print(f"{args.kind}({G.spec}): {g.n} vertices, {g.m} edges", file=sys.stderr)
    return EXIT_OK


def analyze_graph(g, connectivity: bool, diameter: bool, perfect: bool, coloring: bool, bound: int | None) -> dict:
    out: dict = {"vertices": g.n, "edges": g.m}
    if connectivity:
        comps = connected_components(g)
        out["connectivity"] = {
            "connected": comps.count == 1,
            "components": comps.count,
            "component_sizes": sorted(comps.sizes(), reverse=True),
        }
    if diameter:
        rep = diameter_report(g)
        out["diameter"] = {
            "value": None if math.isinf(rep.value) else int(rep.value),
            "component_diameters": rep.component_diameters,
            "geodesic": None if rep.geodesic is None else [g.descriptions[g.position(x)] for x in rep.geodesic],
        }
    if perfect:
        out["perfect"] = is_perfect(g, max_len=bound).to_dict()
    if coloring:
        clique, colors = clique_and_coloring(g)
        out["coloring"] = {"omega": len(clique), "chi": max(colors) + 1 if colors else 0, "clique": [g.descriptions[i] for i in clique]}
    return out


def _analysis_text(name: str, res: dict) -> str:
    lines = [f"D({name}): {res['vertices']} vertices, {res['edges']} edges"]
    if "connectivity" in res:
        c = res["connectivity"]
        state = "empty" if res["vertices"] == 0 else ("connected" if c["connected"] else "disconnected")
        lines.append(f"connectivity  {state}; component sizes {c['component_sizes']}")
    if "diameter" in res:
        d = res["diameter"]
        value = "infinite (disconnected)" if d["value"] is None else str(d["value"])
        lines.append(f"diameter      {value}")
        if d["geodesic"]:
            lines.append("geodesic      " + " ~ ".join(d["geodesic"]))
    if "perfect" in res:
        p = res["perfect"]
        status = p["status"] + (f"(L={p['bound']})" if p["status"] == "bounded-perfect" else "")
        lines.append(f"perfect       {status}")
        if p["witness"]:
            where = "complement" if p["in_complement"] else "graph"
            lines.append(f"odd hole ({where}, length {len(p['witness'])}): " + " ~ ".join(p["witness"]))
    if "coloring" in res:
        c = res["coloring"]
        lines.append(f"omega {c['omega']}, chi {c['chi']}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args: argparse.Namespace) -> int:
    flags = (args.connectivity, args.diameter, args.perfect, args.coloring)
    if not any(flags):
        flags = (True, True, False, False)
    G = build_group(args.spec)
    g = build_diff_graph(G)
    res = analyze_graph(g, *flags, bound=args.hole_bound)
    res["group"] = G.spec
    _emit(_dump(res) if args.json else _analysis_text(G.spec, res), args.out)
    return EXIT_OK


def cmd_perfect(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    verdict = is_perfect(g, max_len=args.hole_bound)
    d = verdict.to_dict()
    if args.json:
        _emit(_dump(d), args.out)
    else:
        _emit(_analysis_text(args.graph, {"vertices": g.n, "edges": g.m, "perfect": d}).split("\n", 1)[1], args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.filter, max_order=args.max_order, seed=args.seed, workers=args.workers, cayley_dir=args.cayley_dir)
    text = render_report(results, args.max_order, args.seed, timings=args.timings)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    for r in results:
        extra = f"  [{r.reason}]" if r.status == "FAIL" else ""
        timing = f"  {r.wall_time:.2f}s" if args.timings else ""
        print(f"{r.id:<22} {r.label}{extra}{timing}", file=sys.stderr if not args.out else sys.stdout)
    if not args.out:
        sys.stdout.write(text)
    return exit_code(results)


def cmd_embed(args: argparse.Namespace) -> int:
    g = read_graph(args.graph)
    emb = embed_graph(g)
    rep = verify_embedding(emb, g)
    _emit(_dump(embedding_to_dict(emb, rep)), args.out)
    return EXIT_OK if rep.ok else EXIT_FAIL


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diffgraph", description="Power, enhanced power and difference graphs of finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="order, prime divisors, center, nilpotency and element orders of a group")
    p.add_argument("spec", help='group spec, e.g. "Z6", "sd(Z7,Z12,3)", "S5", "D4 x Z3"')
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--out", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("graph", help="build and export Pow(G), EPow(G) or D(G)")
    p.add_argument("spec")
    p.add_argument("--kind", choices=("pow", "epow", "diff"), default="diff")
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("analyze", help="connectivity, diameter, perfectness or coloring of D(G)")
    p.add_argument("spec")
    p.add_argument("--connectivity", action="store_true")
    p.add_argument("--diameter", action="store_true")
    p.add_argument("--perfect", action="store_true")
    p.add_argument("--coloring", action="store_true", help="exact clique and chromatic numbers")
    p.add_argument("--hole-bound", type=hole_bound, default=None, help="odd-hole length bound (default: unbounded up to 64 vertices, else 11)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("perfect", help="perfectness of a graph read from a JSON or edgelist file")
    p.add_argument("graph")
    p.add_argument("--hole-bound", type=hole_bound, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_perfect)

    p = sub.add_parser("verify", help="run the check suite; exit code 1 iff a check fails")
    p.add_argument("filter", nargs="?", default="*", help="check id glob, e.g. C11 or 'C1*'")
    p.add_argument("--max-order", type=positive_int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=positive_int, default=None, help="worker processes (default: CPU count)")
    p.add_argument("--cayley-dir", help="directory of extra Cayley tables to include in the catalog")
    p.add_argument("--timings", action="store_true", help="include wall times (the report is then not reproducible)")
    p.add_argument("--out", help="write the JSON report here; a one-line status per result goes to stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("embed", help="realize a graph as an induced subgraph of D(G) for an abelian G")
    p.add_argument("graph", help="edgelist or JSON graph file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_embed)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, GroupCapError, CayleyTableError, ColoringRefused, SearchBudgetExceeded, ValueError, OSError) as exc:
        print(f"diffgraph: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
