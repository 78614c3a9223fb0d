"""Linear adjusting descent inside the dual feasible region.

From a dual-feasible point the engine walks along the goal direction until
one or more facets block it, adds the blockers to the active set, replaces
the direction by the Hat projection of the goal onto the blockers'
intersection, and repeats. The active set only grows, so the walk takes at
most ``m`` steps before the direction is pinned to zero.
"""
from dataclasses import dataclass, field

import numpy as np
from sklearn.base import BaseEstimator

from .model import DualProblem, PrimalProblem, is_dual_feasible, to_dual
from .numkit import (
    RATIONAL, as_array, check_arithmetic, default_tol, inner, rank,
)
from .projection import HatProjector
from .validation import check_vector

FULLY_BLOCKED = "FullyBlocked"
DIRECTION_VANISHED = "DirectionVanished"
UNBLOCKED = "Unblocked"
MAX_ITERATIONS = "MaxIterations"

# relative tie tolerance on step lengths in float mode
TIE_RTOL = 1e-9


class InfeasibleStartError(ValueError):
    """The start point violates a facet."""


@dataclass(frozen=True)
class StageRecord:
    """One stage of the descent.

    ``d`` is the direction that was followed from the previous stage point
    to ``P``; ``t_star`` is the step length along it and ``j_star`` the
    facets met at ``P`` (1-based).
    """

    s: int
    P: np.ndarray
    sigma_after: tuple
    t_star: object
    j_star: tuple
    d: np.ndarray
    objective: object


@dataclass
class LapResult:
    trajectory: list
    status: str
    final_point: np.ndarray
    final_objective: object
    start: np.ndarray = None
    goal: np.ndarray = None
    sigma: tuple = field(default=())
    m: int = 0
    n: int = 0


def _scan_tol(arithmetic, tol):
    return default_tol(arithmetic) if tol is None else tol


def next_stage(d_problem, P, d, sigma=(), tol=None):
    """Step to the first blocking facets along ``P + t d``.

    For every facet outside ``sigma`` with ``(tau_j, d) != 0`` the crossing
    parameter ``t_j = (c_j - (tau_j, P)) / (tau_j, d)`` is computed; the
    smallest positive ``t_j`` wins, and every facet tied with it (exactly
    in rational mode, to a relative ``1e-9`` in float mode) blocks.

    Returns
    -------
    (t_star, j_star) or None
        ``None`` when no facet blocks the ray.
    """
    arithmetic = d_problem.arithmetic
    P = check_vector(P, arithmetic, length=d_problem.m, name="P")
    d = check_vector(d, arithmetic, length=d_problem.m, name="d")
    tol = _scan_tol(arithmetic, tol)
    if all(abs(v) <= tol for v in d):
        raise ValueError("direction d is zero")
    skip = set(sigma)
    steps = []
    for f in d_problem.facets:
        if f.index in skip:
            continue
        rate = inner(f.tau, d)
        if abs(rate) <= tol or rate == 0:
            continue
        t = (f.c - inner(f.tau, P)) / rate
        if t > tol:
            steps.append((t, f.index))
    if not steps:
        return None
    t_star = min(t for t, _ in steps)
    if arithmetic == RATIONAL:
        j_star = tuple(j for t, j in steps if t == t_star)
    else:
        band = TIE_RTOL * max(1.0, abs(t_star))
        j_star = tuple(j for t, j in steps if t - t_star <= band)
    return t_star, j_star


def advance(P, d, t_star):
    """``P + t_star * d``."""
    if t_star < 0:
        raise ValueError("t_star must be nonnegative")
    return np.asarray(P) + np.asarray(d) * t_star


class _ActiveSet:
    """Blocker set with the projection of the goal onto its intersection."""

    def __init__(self, d_problem, goal, tol):
        self.problem = d_problem
        self.goal = goal
        self.tol = tol
        self.sigma = []

    def add(self, indices):
        self.sigma.extend(j for j in sorted(indices) if j not in self.sigma)

    def direction(self):
        if not self.sigma:
            return self.goal.copy()
        normals = np.array([self.problem.facet(j).tau for j in self.sigma])
        return HatProjector(tol=self.tol).fit(
            normals, sigma=self.sigma).transform(self.goal)

    def rank(self):
        if not self.sigma:
            return 0
        cols = np.column_stack([self.problem.facet(j).tau for j in self.sigma])
        return rank(cols, self.tol)

    def settle(self, P):
        """Project the goal, absorbing facets that ``P`` already touches and
        the projected direction would cross."""
        while True:
            d = self.direction()
            touching = [
                f.index for f in self.problem.facets
                if f.index not in self.sigma
                and abs(f.slack(P)) <= self.tol
                and inner(f.tau, d) < -self.tol
            ]
            if not touching:
                return d
            self.add(touching)


def _is_zero(v, tol):
    return all(abs(x) <= tol for x in v)


def solve_lap(d_problem, P0, g=None, tol=None, max_iters=None):
    """Run the adjusting descent from ``P0``.

    Parameters
    ----------
    d_problem : DualProblem
    P0 : array_like of shape (m,)
        Dual-feasible start point.
    g : array_like of shape (m,), optional
        Goal direction; defaults to ``-b``.
    tol : scalar, optional
        0 in rational mode, 1e-9 in float mode by default.
    max_iters : int, optional
        Defaults to ``m + 5``.
    """
    arithmetic = d_problem.arithmetic
    m = d_problem.m
    tol = _scan_tol(arithmetic, tol)
    P = check_vector(P0, arithmetic, length=m, name="P0")
    goal = -d_problem.b if g is None else check_vector(g, arithmetic,
                                                        length=m, name="g")
    if _is_zero(goal, tol):
        raise ValueError("goal direction g is zero")
    if not is_dual_feasible(d_problem, P, tol):
        raise InfeasibleStartError("start point is not dual-feasible")
    if max_iters is None:
        max_iters = m + 5

    active = _ActiveSet(d_problem, goal, tol)
    trajectory = []
    d = active.settle(P)
    status = MAX_ITERATIONS
    for s in range(1, max_iters + 1):
        if _is_zero(d, tol):
            status = FULLY_BLOCKED if active.rank() == m else DIRECTION_VANISHED
            break
        step = next_stage(d_problem, P, d, active.sigma, tol)
        if step is None:
            status = UNBLOCKED
            break
        t_star, j_star = step
        P = advance(P, d, t_star)
        active.add(j_star)
        trajectory.append(StageRecord(
            s=s, P=P, sigma_after=tuple(active.sigma), t_star=t_star,
            j_star=j_star, d=d, objective=d_problem.objective(P)))
        d = active.settle(P)
    else:
        if _is_zero(d, tol):
            status = FULLY_BLOCKED if active.rank() == m else DIRECTION_VANISHED

    return LapResult(trajectory=trajectory, status=status, final_point=P,
                     final_objective=d_problem.objective(P),
                     start=check_vector(P0, arithmetic), goal=goal,
                     sigma=tuple(active.sigma), m=m, n=d_problem.n)


class LAPSolver(BaseEstimator):
    """Estimator wrapper around :func:`solve_lap`.

    Parameters
    ----------
    arithmetic : {"rational", "float"}
    tol : scalar, optional
    max_iter : int, optional
        Stage limit, ``m + 5`` when omitted.
    goal : array_like, optional
        Goal direction, ``-b`` when omitted.

    Attributes
    ----------
    result_ : LapResult
    point_ : ndarray
        Final dual point.
    objective_ : scalar
    status_ : str
    n_iter_ : int
        Number of stages taken.
    """

    def __init__(self, arithmetic=RATIONAL, tol=None, max_iter=None, goal=None):
        self.arithmetic = arithmetic
        self.tol = tol
        self.max_iter = max_iter
        self.goal = goal

    def fit(self, problem, start):
        check_arithmetic(self.arithmetic)
        if isinstance(problem, PrimalProblem):
            problem = to_dual(problem.astype(self.arithmetic))
        elif isinstance(problem, DualProblem):
            problem = problem.astype(self.arithmetic)
        else:
            raise TypeError("problem must be a PrimalProblem or DualProblem")
        start = as_array(start, self.arithmetic)
        goal = None if self.goal is None else as_array(self.goal, self.arithmetic)
        self.result_ = solve_lap(problem, start, goal, self.tol, self.max_iter)
        self.point_ = self.result_.final_point
        self.objective_ = self.result_.final_objective
        self.status_ = self.result_.status
        self.n_iter_ = len(self.result_.trajectory)
        return self


__all__ = [
    "StageRecord", "LapResult", "LAPSolver", "InfeasibleStartError",
    "next_stage", "advance", "solve_lap", "FULLY_BLOCKED",
    "DIRECTION_VANISHED", "UNBLOCKED", "MAX_ITERATIONS",
]
