"""DOT, edgelist and JSON serialization of graphs.

All writers are byte-deterministic: vertices appear in graph order, edges in
sorted (u, v) order, JSON keys sorted. The edgelist and JSON readers rebuild a
Graph whose labels are the vertex description strings.
"""

from __future__ import annotations

import json
from pathlib import Path

from diffgraph.graphs.graph import Graph

FORMATS = ("dot", "edgelist", "json")


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph) -> str:
    name = f"{g.meta.get('kind', 'graph')} {g.meta.get('group', '')}".strip()
    lines = [f"graph {_dot_quote(name)} {{"]
    for i, text in enumerate(g.descriptions):
        lines.append(f"  {i} [label={_dot_quote(text)}];")
    for u, v in g.edges.tolist():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_edgelist(g: Graph) -> str:
    lines = []
    if "group" in g.meta:
        lines.append(f"# group {g.meta['group']}")
    if "kind" in g.meta:
        lines.append(f"# kind {g.meta['kind']}")
    lines.append(f"# vertices {g.n}")
    for i, text in enumerate(g.descriptions):
        lines.append(f"# label {i} {text}")
    for u, v in g.edges.tolist():
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def to_json_dict(g: Graph) -> dict:
    return {
        "vertices": list(g.descriptions),
        "edges": g.edges.tolist(),
        "metadata": {"group": g.meta.get("group", ""), "kind": g.meta.get("kind", "")},
    }


def to_json(g: Graph) -> str:
    return json.dumps(to_json_dict(g), sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def render(g: Graph, fmt: str) -> str:
    writers = {"dot": to_dot, "edgelist": to_edgelist, "json": to_json}
    if fmt not in writers:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    return writers[fmt](g)


def export_graph(g: Graph, fmt: str, path: str | Path) -> None:
    Path(path).write_text(render(g, fmt), encoding="utf-8")


def parse_edgelist(text: str) -> Graph:
    """Read an edgelist.

    With a ``# vertices n`` header, edge tokens are vertex positions and
    ``# label i text`` lines name them. Without one, every token is a vertex
    name; vertices are ordered numerically when all names are integers, else
    by first appearance. ``# vertex name`` lines add isolated vertices.
    """
    meta: dict[str, str] = {}
    declared: int | None = None
    names: dict[int, str] = {}
    extra: list[str] = []
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].strip().split(None, 2)
            if not parts:
                continue
            key = parts[0]
            if key == "vertices" and len(parts) >= 2:
                declared = int(parts[1])
            elif key == "label" and len(parts) >= 2:
                names[int(parts[1])] = parts[2] if len(parts) == 3 else ""
            elif key == "vertex" and len(parts) >= 2:
                extra.append(" ".join(parts[1:]))
            elif key in ("group", "kind"):
                meta[key] = " ".join(parts[1:])
            continue
        tok = line.split()
        if len(tok) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        pairs.append((tok[0], tok[1]))

    if declared is not None:
        edges = []
        for u, v in pairs:
            a, b = int(u), int(v)
            if not (0 <= a < declared and 0 <= b < declared):
                raise ValueError(f"edge ({a}, {b}) outside {declared} declared vertices")
            edges.append((a, b))
        desc = [names.get(i, str(i)) for i in range(declared)]
        return Graph(list(range(declared)), edges, meta=meta, descriptions=desc)

    seen: dict[str, None] = {}
    for u, v in pairs:
        seen.setdefault(u)
        seen.setdefault(v)
    for x in extra:
        seen.setdefault(x)
    order = list(seen)
    if order and all(_is_int(x) for x in order):
        order.sort(key=int)
    pos = {x: i for i, x in enumerate(order)}
    return Graph(order, [(pos[u], pos[v]) for u, v in pairs], meta=meta)


def _is_int(s: str) -> bool:
    try:
        int(s)
    except ValueError:
        return False
    return True


def read_edgelist(path: str | Path) -> Graph:
    return parse_edgelist(Path(path).read_text(encoding="utf-8"))


def from_json_dict(data: dict) -> Graph:
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise ValueError("graph JSON needs 'vertices' and 'edges'")
    verts = [str(v) for v in data["vertices"]]
    meta = {k: v for k, v in (data.get("metadata") or {}).items() if v != ""}
    return Graph(verts, data["edges"], meta=meta)


def read_json(path: str | Path) -> Graph:
    return from_json_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def read_graph(path: str | Path) -> Graph:
    """JSON when the file parses as a JSON object, edgelist otherwise."""
    text = Path(path).read_text(encoding="utf-8")
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return from_json_dict(json.loads(text))
    return parse_edgelist(text)
