"""Exact covering-program solver and certificate checks."""

from .certificates import (
    check_vectors,
    dual_objective,
    feasible_point_bound,
    min_ratio,
    primal_objective,
    verify_certificate,
)
from .simplex import DualSimplex, solve_min

__all__ = [
    "DualSimplex",
    "check_vectors",
    "dual_objective",
    "feasible_point_bound",
    "min_ratio",
    "primal_objective",
    "solve_min",
    "verify_certificate",
]
