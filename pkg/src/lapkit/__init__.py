"""Linear adjusting programming with Hat-matrix projections.

The descent engine walks inside the dual feasible region of
``max{c^T x | A x <= b, x >= 0}``, projecting the goal direction onto the
intersection of the facets that block it. Full-tableau simplex, affine
scaling and a vertex-enumeration oracle are included for comparison.
"""
from .baselines import (
    AffineScalingSolver, SimplexSolver, VertexOracle, affine_solve,
    ellipsoid_bound, oracle_solve, simplex_solve,
)
from .lap import LAPSolver, LapResult, StageRecord, advance, next_stage, solve_lap
from .model import (
    DualProblem, Facet, PrimalProblem, SimplexTableau, build_tableau,
    format_problem, is_dual_feasible, parse_problem, read_problem, to_dual,
)
from .projection import HatProjector, build_hat, project, project_single

__version__ = "0.1.0"

__all__ = [
    "AffineScalingSolver", "SimplexSolver", "VertexOracle", "affine_solve",
    "ellipsoid_bound", "oracle_solve", "simplex_solve", "LAPSolver",
    "LapResult", "StageRecord", "advance", "next_stage", "solve_lap",
    "DualProblem", "Facet", "PrimalProblem", "SimplexTableau",
    "build_tableau", "format_problem", "is_dual_feasible", "parse_problem",
    "read_problem", "to_dual", "HatProjector", "build_hat", "project",
    "project_single",
]
