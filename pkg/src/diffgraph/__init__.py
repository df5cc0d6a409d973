"""Power graphs, enhanced power graphs and their difference graphs over finite groups."""

from diffgraph.groups import build_group, parse_spec
from diffgraph.graphs import (
    Graph,
    build_diff_graph,
    build_epow_graph,
    build_pow_graph,
    connected_components,
    diameter,
    distance,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "build_diff_graph",
    "build_epow_graph",
    "build_group",
    "build_pow_graph",
    "connected_components",
    "diameter",
    "distance",
    "parse_spec",
]
