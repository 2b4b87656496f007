"""Exact graph colouring parameters on small graphs."""

from .coloring import chromatic_number, is_k_choosable, l_coloring_exists, list_chromatic_number
from .correspondence import (
    BadCover,
    Cover,
    bad_cover_c4,
    bad_cover_gn,
    dp_chromatic_number,
    from_lists,
    is_k_dp_colorable,
    is_lc_colorable,
    normalize_cover,
)
from .density import degeneracy, mad, mad_bruteforce
from .errors import DomainError, Graph6Error, GuardError, InvariantViolation
from .graph import (
    Graph,
    LabeledGn,
    Orientation,
    complete,
    complete_bipartite,
    construct_gn,
    cycle,
    disjoint_union,
    join,
    max_outdegree,
    orient_gn,
    parse_graph6,
    path,
    to_graph6,
)
from .orientations import (
    AlmostEulerianProfile,
    Certified,
    ParityCounts,
    almost_eulerian_counts,
    alon_tarsi_number,
    at_upper_witness,
    certify_at,
    eulerian_parity,
    orientation_with_bounded_outdegree,
    verify_sum_of_squares,
)

__all__ = [
    "AlmostEulerianProfile", "BadCover", "Certified", "Cover", "DomainError", "Graph", "Graph6Error",
    "GuardError", "InvariantViolation", "LabeledGn", "Orientation", "ParityCounts",
    "almost_eulerian_counts", "alon_tarsi_number", "at_upper_witness", "bad_cover_c4", "bad_cover_gn",
    "certify_at", "chromatic_number", "complete", "complete_bipartite", "construct_gn", "cycle",
    "degeneracy", "disjoint_union", "dp_chromatic_number", "eulerian_parity", "from_lists",
    "is_k_choosable", "is_k_dp_colorable", "is_lc_colorable", "join", "l_coloring_exists",
    "list_chromatic_number", "mad", "mad_bruteforce", "max_outdegree", "normalize_cover", "orient_gn",
    "orientation_with_bounded_outdegree", "parse_graph6", "path", "to_graph6", "verify_sum_of_squares",
]
