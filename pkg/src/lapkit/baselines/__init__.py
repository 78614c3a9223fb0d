"""Comparison methods and a ground-truth oracle."""
from .affine import (
    AffineResult, AffineScalingSolver, AffineState, affine_init, affine_solve,
    affine_step,
)
from .ellipsoid import (
    data_bound, ellipsoid_bound, perturbation, scaled_entry_bound,
)
from .oracle import NoFeasibleVertexError, OracleResult, VertexOracle, oracle_solve
from .simplex import (
    PivotLimitError, PivotRecord, SimplexResult, SimplexSolver, UnboundedError,
    simplex_solve,
)

__all__ = [
    "AffineResult", "AffineScalingSolver", "AffineState", "affine_init",
    "affine_solve", "affine_step", "data_bound", "ellipsoid_bound", "perturbation",
    "scaled_entry_bound", "NoFeasibleVertexError", "OracleResult",
    "VertexOracle", "oracle_solve", "PivotLimitError", "PivotRecord",
    "SimplexResult", "SimplexSolver", "UnboundedError", "simplex_solve",
]
