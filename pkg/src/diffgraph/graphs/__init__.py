from diffgraph.graphs.build import (
    GRAPH_CAP,
    build_diff_graph,
    build_epow_graph,
    build_graph,
    build_pow_graph,
    diff_edges,
    diff_vertex_mask,
    maximal_cyclic_subgroups,
)
from diffgraph.graphs.export import (
    FORMATS,
    export_graph,
    from_json_dict,
    parse_edgelist,
    read_edgelist,
    read_graph,
    read_json,
    render,
)
from diffgraph.graphs.graph import (
    DENSE_LIMIT,
    ComponentReport,
    DiameterReport,
    Graph,
    GraphCapError,
    bfs,
    complement,
    connected_components,
    diameter,
    diameter_report,
    distance,
    induced_subgraph,
)

__all__ = [
    "DENSE_LIMIT",
    "FORMATS",
    "GRAPH_CAP",
    "ComponentReport",
    "DiameterReport",
    "Graph",
    "GraphCapError",
    "bfs",
    "build_diff_graph",
    "build_epow_graph",
    "build_graph",
    "build_pow_graph",
    "complement",
    "connected_components",
    "diameter",
    "diameter_report",
    "diff_edges",
    "diff_vertex_mask",
    "distance",
    "export_graph",
    "from_json_dict",
    "induced_subgraph",
    "maximal_cyclic_subgroups",
    "parse_edgelist",
    "read_edgelist",
    "read_graph",
    "read_json",
    "render",
]
