"""Exact analysis of induced subgraphs of Kneser graphs.

All rationals are `fractions.Fraction`; arbitrary-size integers are plain
Python ints. Families are immutable collections of k-subsets of [n] with
1-based elements.
"""

from kneser._core import (
    Family,
    binom,
    bipartite_edge_count,
    bipartite_singular_sq,
    construction_upper_bound,
    count_from_lambda,
    degree_profile,
    eigencomponent_norms,
    exact_minimize,
    explicit_family,
    falling_ratio,
    full_family,
    greedy_matching,
    linear_profile,
    main_lower_bound,
    order_segment,
    random_expected_degree,
    random_family,
    run_criterion,
    sets_meeting,
    singular_ratio_bound,
    size_parameter,
    slice,
    spectrum,
    star_densities,
    stars_max_degree,
    suite_criteria,
    union_of_stars,
)

__all__ = [
    "Family",
    "binom",
    "bipartite_edge_count",
    "bipartite_singular_sq",
    "construction_upper_bound",
    "count_from_lambda",
    "degree_profile",
    "eigencomponent_norms",
    "exact_minimize",
    "explicit_family",
    "falling_ratio",
    "full_family",
    "greedy_matching",
    "linear_profile",
    "main_lower_bound",
    "order_segment",
    "random_expected_degree",
    "random_family",
    "run_criterion",
    "sets_meeting",
    "singular_ratio_bound",
    "size_parameter",
    "slice",
    "spectrum",
    "star_densities",
    "stars_max_degree",
    "suite_criteria",
    "union_of_stars",
]
