"""Brute-force vertex enumeration of the dual polyhedron.

Every ``m``-subset of facets with independent normals defines a candidate
vertex; the feasible ones are compared by ``(b, y)``. Always exact.
"""
from dataclasses import dataclass
from itertools import combinations

import numpy as np
from sklearn.base import BaseEstimator

from ..model import PrimalProblem, is_dual_feasible, to_dual
from ..numkit import RATIONAL, SingularMatrixError, inner, solve

MAX_M = 8
MAX_FACETS = 24


class NoFeasibleVertexError(ValueError):
    """No subset of facets meets in a feasible vertex."""


@dataclass(frozen=True)
class OracleResult:
    optimum: object
    argmin: np.ndarray
    vertices_checked: int
    feasible_vertices: int


def oracle_solve(d_problem):
    """Minimise ``(b, y)`` over all feasible vertices of ``d_problem``.

    Equal objectives resolve to the lexicographically smallest vertex.
    ``vertices_checked`` counts scanned subsets; ``feasible_vertices``
    counts distinct feasible vertices.

    Raises
    ------
    ValueError
        If ``m > 8`` or ``n + m > 24``.
    NoFeasibleVertexError
        If no feasible vertex exists.
    """
    d = d_problem.astype(RATIONAL)
    m, k = d.m, len(d.facets)
    if m > MAX_M or k > MAX_FACETS:
        raise ValueError(f"instance too large for enumeration (m={m}, facets={k})")
    N = d.normals.T
    checked = 0
    seen = set()
    best = None
    for subset in combinations(range(k), m):
        checked += 1
        rows = list(subset)
        try:
            y = solve(N[rows], d.offsets[rows])
        except SingularMatrixError:
            continue
        key = tuple(y)
        if key in seen or not is_dual_feasible(d, y):
            continue
        seen.add(key)
        cand = (inner(d.b, y), key)
        if best is None or cand < best:
            best = cand
    if best is None:
        raise NoFeasibleVertexError("dual polyhedron has no feasible vertex")
    return OracleResult(best[0], np.array(best[1], dtype=object), checked,
                        len(seen))


class VertexOracle(BaseEstimator):
    """Estimator wrapper around :func:`oracle_solve`.

    Attributes
    ----------
    result_ : OracleResult
    point_ : ndarray
    objective_ : Fraction
    """

    def fit(self, problem):
        if isinstance(problem, PrimalProblem):
            problem = to_dual(problem.astype(RATIONAL))
        self.result_ = oracle_solve(problem)
        self.point_ = self.result_.argmin
        self.objective_ = self.result_.optimum
        return self
