"""Edge-rigidity and Laplacian eigenvalue-sum analysis of graphs."""

from ._core import (
    EdgeRigidError,
    Graph,
    analyze,
    certificate,
    char_poly,
    effective_resistances,
    embedding,
    families,
    gauge_product,
    is_edge_rigid,
    kirchhoff_index,
    kyfan,
    laplacian,
    optimize,
    parse_graph,
    profile,
    tree_count,
    weighted_tree_count,
)

__all__ = [
    "EdgeRigidError",
    "Graph",
    "analyze",
    "certificate",
    "char_poly",
    "effective_resistances",
    "embedding",
    "families",
    "gauge_product",
    "is_edge_rigid",
    "kirchhoff_index",
    "kyfan",
    "laplacian",
    "optimize",
    "parse_graph",
    "profile",
    "tree_count",
    "weighted_tree_count",
]
