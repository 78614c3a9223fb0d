"""Full-tableau primal simplex with Bland's smallest-index rule."""
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from sklearn.base import BaseEstimator

from ..model import PrimalProblem, build_tableau
from ..numkit import RATIONAL, arithmetic_of, check_arithmetic, default_tol


class UnboundedError(Exception):
    """The primal objective is unbounded along the entering column."""

    def __init__(self, message, entering=None):
        super().__init__(message)
        self.entering = entering


class PivotLimitError(Exception):
    """Pivot budget exhausted before optimality."""


@dataclass(frozen=True)
class PivotRecord:
    """``entering``/``leaving`` are 0-based tableau columns (x's then s's);
    ``tableau`` is the snapshot after the pivot."""

    k: int
    entering: int
    leaving: int
    tableau: object
    objective: object


class SimplexResult(NamedTuple):
    x: np.ndarray
    objective: object
    pivot_log: list


def pivot(t, row, col):
    """Pivot ``t`` in place on ``(row, col)``."""
    g = t.grid
    g[row] = g[row] / g[row, col]
    for r in range(g.shape[0]):
        if r != row and g[r, col] != 0:
            g[r] = g[r] - g[r, col] * g[row]
    t.basis[row] = col


def choose_entering(t, tol):
    """Smallest column index with a negative reduced cost, or None."""
    for j, rc in enumerate(t.reduced_costs):
        if rc < -tol:
            return j
    return None


def choose_leaving(t, col, tol):
    """Minimum-ratio row; ties go to the smallest basic variable index."""
    best = None
    for i in range(t.m):
        a = t.grid[i, col]
        if a > tol:
            key = (t.grid[i, -1] / a, t.basis[i])
            if best is None or key < best[0]:
                best = (key, i)
    return None if best is None else best[1]


def simplex_solve(t, max_pivots=200, tol=None):
    """Run Bland's-rule simplex on a tableau with a feasible basis.

    The tableau is not modified; pivot snapshots are copies.

    Returns
    -------
    SimplexResult
        ``(x, objective, pivot_log)``.

    Raises
    ------
    UnboundedError
        If an entering column has no positive entry.
    PivotLimitError
        If ``max_pivots`` pivots do not reach optimality.
    """
    t = t.copy()
    if tol is None:
        tol = default_tol(arithmetic_of(t.grid))
    log = []
    while True:
        col = choose_entering(t, tol)
        if col is None:
            return SimplexResult(t.primal_solution(), t.objective, log)
        if len(log) >= max_pivots:
            raise PivotLimitError(f"no optimum after {max_pivots} pivots")
        row = choose_leaving(t, col, tol)
        if row is None:
            raise UnboundedError(
                f"column {col + 1} has no positive entry", entering=col)
        leaving = t.basis[row]
        pivot(t, row, col)
        log.append(PivotRecord(len(log) + 1, col, leaving, t.copy(),
                               t.objective))


class SimplexSolver(BaseEstimator):
    """Estimator wrapper: ``fit(problem)`` solves the primal.

    Attributes
    ----------
    x_ : ndarray
        Optimal primal point.
    objective_ : scalar
        ``c^T x_``.
    pivot_log_ : list of PivotRecord
    n_iter_ : int
    """

    def __init__(self, arithmetic=RATIONAL, max_iter=200, tol=None):
        self.arithmetic = arithmetic
        self.max_iter = max_iter
        self.tol = tol

    def fit(self, problem):
        check_arithmetic(self.arithmetic)
        if not isinstance(problem, PrimalProblem):
            raise TypeError("problem must be a PrimalProblem")
        tableau = build_tableau(problem.astype(self.arithmetic))
        self.x_, self.objective_, self.pivot_log_ = simplex_solve(
            tableau, self.max_iter, self.tol)
        self.n_iter_ = len(self.pivot_log_)
        return self
