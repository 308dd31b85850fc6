"""Exact cycle counting in small graphs and complete multipartite graphs,
with desk-scale verification suites for the counting inequalities around
Turán graphs."""

from .graphs import (
    ClassVector,
    Graph,
    PartitionInfo,
    best_k_partition,
    chromatic_number,
    complete_multipartite,
    has_critical_edge,
    make_graph,
    turan_class_sizes,
    turan_edge_count,
    turan_graph,
)
from .counting import (
    count_cycles,
    count_hamilton,
    count_paths,
    count_regular_and_irregular_cycles,
    cycle_spectrum,
)
from .analytic import (
    CodeClassSpec,
    bipartite_cycle_counts,
    code_cycle_count,
    cycle_spectrum_multipartite,
    hamilton_multipartite,
    prob_Q_given_P,
    rooted_hamilton_permutations,
)
from .morphisms import canonical_label, contains_subgraph, is_isomorphic

__version__ = "0.1.0"

__all__ = [
    "ClassVector",
    "CodeClassSpec",
    "Graph",
    "PartitionInfo",
    "best_k_partition",
    "bipartite_cycle_counts",
    "canonical_label",
    "chromatic_number",
    "code_cycle_count",
    "complete_multipartite",
    "contains_subgraph",
    "count_cycles",
    "count_hamilton",
    "count_paths",
    "count_regular_and_irregular_cycles",
    "cycle_spectrum",
    "cycle_spectrum_multipartite",
    "hamilton_multipartite",
    "has_critical_edge",
    "is_isomorphic",
    "make_graph",
    "prob_Q_given_P",
    "rooted_hamilton_permutations",
    "turan_class_sizes",
    "turan_edge_count",
    "turan_graph",
]
