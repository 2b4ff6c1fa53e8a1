"""Exact graph invariants for binomial edge ideals, an independent
regularity oracle, and corpus-scale verification of the bound chain
L <= reg <= eta <= c."""

from .errors import FieldDisagreementError, ParseError, ResourceLimitError
from .graphs import Graph, edge
from .graphio import decode_graph6, encode_graph6, format_edge_list, parse_edge_list
from .invariants import (
    CliqueDisjointSet,
    ConflictGraph,
    conflict_graph,
    eta,
    extend_clique_disjoint,
    in_common_clique,
    is_clique_disjoint,
    longest_induced_path,
    maximal_cliques,
    max_independent_set,
)
from .compatibility import (
    BoundChainReport,
    CompatibilityReport,
    bound_chain,
    check_compatibility,
    check_iv_lemma,
    check_regularity_recursion,
    eta_value,
    nonfree_vertex_failures,
)
from .regularity import (
    RegularityResult,
    SquarefreeIdeal,
    homology_dims,
    initial_ideal,
    regularity_bei,
    regularity_squarefree,
)
from . import generators

__version__ = "0.1.0"

__all__ = [
    "BoundChainReport",
    "CliqueDisjointSet",
    "CompatibilityReport",
    "ConflictGraph",
    "FieldDisagreementError",
    "Graph",
    "ParseError",
    "RegularityResult",
    "ResourceLimitError",
    "SquarefreeIdeal",
    "bound_chain",
    "check_compatibility",
    "check_iv_lemma",
    "check_regularity_recursion",
    "conflict_graph",
    "decode_graph6",
    "edge",
    "encode_graph6",
    "eta",
    "eta_value",
    "extend_clique_disjoint",
    "format_edge_list",
    "generators",
    "homology_dims",
    "in_common_clique",
    "initial_ideal",
    "is_clique_disjoint",
    "longest_induced_path",
    "max_independent_set",
    "maximal_cliques",
    "nonfree_vertex_failures",
    "parse_edge_list",
    "regularity_bei",
    "regularity_squarefree",
]
