"""Exact SNT-rank computation for pattern graphs.

Thin wrapper over the C++ core: graphs with loops, set-join covers,
exact solving with certificates, closed-form ranks, uniqueness
classification, and integer witness trifactorizations.
"""

from ._core import (
    Cover,
    Graph,
    LimitError,
    ParseError,
    SolveResult,
    SolveStatus,
    UniquenessReport,
    ValidityReport,
    build_complete_cover,
    canonical_form,
    classify_uniqueness,
    complete_graph,
    complete_graph_loops,
    conormal_product,
    cover_graph,
    cover_to_factors,
    cycle_graph,
    disjoint_union,
    enumerate_optimal_covers,
    factors_to_cover,
    graph_join,
    katona_recursion_check,
    katona_s,
    lower_bound,
    min_factor_sum,
    parse_graph,
    path_graph,
    pattern_of,
    sdr_exists,
    snt_rank,
    snt_rank_cycle,
    snt_rank_exact,
    snt_rank_forest,
    snt_rank_generalized_star,
    snt_rank_unicyclic,
    star_graph,
    support_condition_check,
    triproduct,
    validate_cover,
    verify_realization,
    write_edgelist,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
