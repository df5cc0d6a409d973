from diffgraph.perfect.coloring import COLORING_LIMIT, ColoringRefused, chromatic_number, clique_number, maximum_clique
from diffgraph.perfect.comparability import (
    ComparabilityOrder,
    ComparabilityReport,
    build_comparability_order,
    comparability_matches_diff,
    comparability_report,
)
from diffgraph.perfect.holes import (
    DEFAULT_BUDGET,
    DEFAULT_MAX_LEN,
    PerfectVerdict,
    SearchBudgetExceeded,
    check_hole,
    find_odd_hole,
    is_perfect,
    reduce_twins,
    search_odd_hole,
)

__all__ = [
    "COLORING_LIMIT",
    "DEFAULT_BUDGET",
    "DEFAULT_MAX_LEN",
    "ColoringRefused",
    "ComparabilityOrder",
    "ComparabilityReport",
    "PerfectVerdict",
    "SearchBudgetExceeded",
    "build_comparability_order",
    "check_hole",
    "chromatic_number",
    "clique_number",
    "comparability_matches_diff",
    "comparability_report",
    "find_odd_hole",
    "is_perfect",
    "maximum_clique",
    "reduce_twins",
    "search_odd_hole",
]
