"""Minimum vertex-splitting graph modification, exactly and with receipts.

Splitting a vertex replaces it by two descendants that share out its
neighborhood (inclusively: possibly overlapping, exclusively: a partition).
This package computes, for four target classes, the minimum number of splits
turning a graph into a member, and emits a split-sequence certificate that an
independent checker can replay.

Target classes and their exact minima:

* constellation (disjoint stars):  m + vertex_cover - n, both variants
* cycle graph, exclusive:          m - n when all degrees are even, else none
* cycle graph, inclusive:          sum of covering-walk length - n per part
* linear forest (disjoint paths):  m - n + minimum trail count, both variants
* bipartite:                       minimum odd cycle transversal, both
"""
from . import bipartite, constellation, cyclegraph, linearforest
from .errors import GraphError, VsplitError
from .graph import (
    BIPARTITE,
    CONSTELLATION,
    CYCLE_GRAPH,
    GRAPH_CLASSES,
    LINEAR_FOREST,
    Graph,
    Multigraph,
    components,
    is_member,
    two_coloring,
)
from .result import SolveResult
from .splits import (
    EXCLUSIVE,
    INCLUSIVE,
    VARIANTS,
    SplitRecord,
    SplitSequence,
    apply_sequence,
    apply_split,
)
from .verify import CheckReport, brute_force_min_splits, check_certificate

__all__ = [
    "BIPARTITE",
    "CONSTELLATION",
    "CYCLE_GRAPH",
    "CheckReport",
    "EXCLUSIVE",
    "GRAPH_CLASSES",
    "Graph",
    "INCLUSIVE",
    "LINEAR_FOREST",
    "Multigraph",
    "SolveResult",
    "SplitRecord",
    "SplitSequence",
    "VARIANTS",
    "VsplitError",
    "apply_sequence",
    "apply_split",
    "brute_force_min_splits",
    "check_certificate",
    "components",
    "is_member",
    "solve",
    "two_coloring",
]

__version__ = "0.1.0"


def solve(
    g: Graph,
    graph_class: str,
    variant: str,
    *,
    node_limit: int = 10**8,
    odd_cap: int = 20,
    oct_cap: int = 12,
) -> SolveResult:
    """Solve for any target class; dispatches to the per-class solver."""
    if graph_class == CONSTELLATION:
        return constellation.solve(g, variant, node_limit=node_limit)
    if graph_class == CYCLE_GRAPH:
        return cyclegraph.solve(g, variant, odd_cap=odd_cap)
    if graph_class == LINEAR_FOREST:
        return linearforest.solve(g, variant)
    if graph_class == BIPARTITE:
        return bipartite.solve(g, variant, max_k=oct_cap)
    raise GraphError(f"unknown graph class {graph_class!r}")
