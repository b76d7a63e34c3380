from .graph import Graph, VertexId, VertexSet, connected_components, neighbors, parse_edge_list
from .subgraph import (
    SubgraphAnalyzer,
    articulation_points,
    common_component_neighborhood,
    induced_components,
    is_connected_induced,
    make_vertex_set,
    set_neighborhood,
)

__all__ = [
    "Graph",
    "VertexId",
    "VertexSet",
    "SubgraphAnalyzer",
    "articulation_points",
    "common_component_neighborhood",
    "connected_components",
    "induced_components",
    "is_connected_induced",
    "make_vertex_set",
    "neighbors",
    "parse_edge_list",
    "set_neighborhood",
]
