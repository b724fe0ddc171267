"""Analysis toolkit for bidirected graphs.

Core concepts: sign-typed ditrail reachability, circular edges and circular
components (the bidirected generalization of strong components), the
Kotzig-Lovasz decomposition of each component, and the parallel structure of
degree-constrained subgraphs (b-factors) obtained by signing a graph with one
of its factors.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .core import (
    MINUS,
    PLUS,
    BidirectedGraph,
    Edge,
    Sign,
    Walk,
    WalkClassification,
    build_graph,
    classify_walk,
    concat_walks,
    from_digraph,
    induced_subgraph,
    reverse_walk,
    trivial_walk,
    walk_from_sequence,
)
from .circular import (
    CircularStructure,
    circular_components,
    circular_edges,
    circularly_connected,
    is_circular,
)
from .factor import (
    DegreeSpec,
    EdgeStatus,
    FactorResult,
    b_factor_components,
    b_flexible_components,
    b_kl_decomposition,
    b_same_class,
    build_gm,
    classify_edges,
    find_b_factor,
    iter_b_factors,
    restrict_b,
)
from .kl import KLPartition, component_restriction, kl_decomposition, same_class
from .reach import (
    ReachProfile,
    TargetSearch,
    ditrail_exists,
    diwalk_exists,
    enumerate_ditrails,
    reach_profile,
)

__all__ = [
    "__version__",
    "BidirectedGraph",
    "CircularStructure",
    "DegreeSpec",
    "Edge",
    "EdgeStatus",
    "FactorResult",
    "KLPartition",
    "MINUS",
    "PLUS",
    "ReachProfile",
    "Sign",
    "TargetSearch",
    "Walk",
    "WalkClassification",
    "b_factor_components",
    "b_flexible_components",
    "b_kl_decomposition",
    "b_same_class",
    "build_gm",
    "build_graph",
    "circular_components",
    "circular_edges",
    "circularly_connected",
    "classify_edges",
    "classify_walk",
    "component_restriction",
    "concat_walks",
    "ditrail_exists",
    "diwalk_exists",
    "enumerate_ditrails",
    "find_b_factor",
    "from_digraph",
    "induced_subgraph",
    "is_circular",
    "iter_b_factors",
    "kl_decomposition",
    "reach_profile",
    "restrict_b",
    "reverse_walk",
    "same_class",
    "trivial_walk",
    "walk_from_sequence",
]
