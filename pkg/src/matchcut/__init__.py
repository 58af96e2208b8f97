"""Matching cut decision toolkit for connected graphs."""

from .graphs import (
    Graph,
    GraphFormatError,
    NotConnectedError,
    bfs_distances,
    complete_bipartite,
    complete_graph,
    connected_components,
    contains_induced,
    cycle_graph,
    disjoint_union,
    distance_profile,
    find_dominating_set,
    find_induced,
    format_edge_text,
    girth,
    is_connected,
    is_dominating,
    load_edge_file,
    parse_edge_text,
    path_graph,
    pattern_from_name,
    star_graph,
)
from .redblue import (
    Colouring,
    MatchingCut,
    bichromatic_edges,
    blue_interface,
    colouring_from_cut,
    cut_from_colouring,
    first_violation,
    is_matching_cut,
    is_valid_colouring,
    red_interface,
)
from .propagation import FourTuple, StartingPair, check_fixpoint, make_pair, propagate
from .oracle import OracleBoundError, enumerate_valid_colourings, has_matching_cut_bruteforce
from .finisher import build_extension_instance, decide_monochromatic_extension, solve_2sat
from .strategies import (
    BranchBudgetError,
    SolveConfig,
    SolveOutcome,
    StructureSearchError,
    find_dominating_structure_p6free,
    lift_h_plus_p3,
    pendant_cut,
    run_strategy,
    small_matching_cut,
    solve,
    solve_monochromatic_dominating,
    solve_p6_free,
    solve_radius_le2,
    solve_sp3_p6,
    solve_with_dominating_set,
)
from .transforms import (
    TransformNotApplicable,
    blowup_round,
    blowup_rounds_needed,
    girth_blowup,
    k22_replace,
    random_gnp,
    random_pattern_free,
    random_radius2,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphFormatError",
    "NotConnectedError",
    "bfs_distances",
    "complete_bipartite",
    "complete_graph",
    "connected_components",
    "contains_induced",
    "cycle_graph",
    "disjoint_union",
    "distance_profile",
    "find_dominating_set",
    "find_induced",
    "format_edge_text",
    "girth",
    "is_connected",
    "is_dominating",
    "load_edge_file",
    "parse_edge_text",
    "path_graph",
    "pattern_from_name",
    "star_graph",
    "Colouring",
    "MatchingCut",
    "bichromatic_edges",
    "blue_interface",
    "red_interface",
    "colouring_from_cut",
    "cut_from_colouring",
    "first_violation",
    "is_matching_cut",
    "is_valid_colouring",
    "FourTuple",
    "StartingPair",
    "check_fixpoint",
    "make_pair",
    "propagate",
    "OracleBoundError",
    "enumerate_valid_colourings",
    "has_matching_cut_bruteforce",
    "build_extension_instance",
    "decide_monochromatic_extension",
    "solve_2sat",
    "BranchBudgetError",
    "SolveConfig",
    "SolveOutcome",
    "StructureSearchError",
    "find_dominating_structure_p6free",
    "lift_h_plus_p3",
    "pendant_cut",
    "run_strategy",
    "small_matching_cut",
    "solve",
    "solve_monochromatic_dominating",
    "solve_p6_free",
    "solve_radius_le2",
    "solve_sp3_p6",
    "solve_with_dominating_set",
    "TransformNotApplicable",
    "blowup_round",
    "blowup_rounds_needed",
    "girth_blowup",
    "k22_replace",
    "random_gnp",
    "random_pattern_free",
    "random_radius2",
    "__version__",
]
