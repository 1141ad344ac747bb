"""Generalized (k, k', k'')-domination: exact solving, bounds, constructions."""

from .bounds import (
    BoundReport,
    bound_report,
    delta_star,
    dominance_failures,
    lower_bound_general,
    lower_bound_general_raw,
    lower_bound_kp_zero,
    lower_bound_kp_zero_raw,
    prior_bounds,
)
from .construction import (
    InapplicableError,
    construct_best,
    construct_part1,
    construct_part2,
    upper_bound,
)
from .graph import (
    FAMILIES,
    Graph,
    GraphError,
    build,
    generate,
    is_connected,
    is_tree,
    max_degree,
    min_degree,
    parse_edgelist,
    write_edgelist,
)
from .params import (
    ParamTriple,
    Violation,
    is_dominating,
    named,
    set_mask,
    trivial_feasible,
    violation_report,
)
from .solver import (
    BUDGET_EXCEEDED,
    INFEASIBLE,
    OPTIMAL,
    SolveResult,
    brute_force_oracle,
    solve_exact,
)

__all__ = [
    "BoundReport", "bound_report", "delta_star", "dominance_failures",
    "lower_bound_general", "lower_bound_general_raw",
    "lower_bound_kp_zero", "lower_bound_kp_zero_raw", "prior_bounds",
    "InapplicableError", "construct_best", "construct_part1", "construct_part2",
    "upper_bound",
    "FAMILIES", "Graph", "GraphError", "build", "generate", "is_connected",
    "is_tree", "max_degree", "min_degree", "parse_edgelist", "write_edgelist",
    "ParamTriple", "Violation", "is_dominating", "named", "set_mask",
    "trivial_feasible", "violation_report",
    "BUDGET_EXCEEDED", "INFEASIBLE", "OPTIMAL", "SolveResult",
    "brute_force_oracle", "solve_exact",
]

__version__ = "0.1.0"
