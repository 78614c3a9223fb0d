"""Short-step affine scaling on the dual, started with a big-M column.

The dual ``min{b^T y | A^T y - s = c, y, s >= 0}`` gets one artificial
column ``c - [A^T -I] e`` with cost ``M`` so that the all-ones vector is a
strictly interior start. Runs in float arithmetic only.
"""
from dataclasses import dataclass, replace

import numpy as np
from sklearn.base import BaseEstimator

from ..model import PrimalProblem
from ..numkit import NumericalFailure, solve

OPTIMAL = "Optimal"
UNBOUNDED = "Unbounded"
MAX_ITERATIONS = "MaxIterations"
NUMERICAL_FAILURE = "NumericalFailure"


@dataclass(frozen=True)
class AffineState:
    """Iterate ``x`` (length ``n + m + 1``) of the augmented system
    ``A0 x = rhs``. ``status`` is set once a stopping check fires."""

    k: int
    x: np.ndarray
    objective: float
    A0: np.ndarray
    c0: np.ndarray
    rhs: np.ndarray
    beta: float
    epsilon: float
    M: float
    status: str = None


@dataclass
class AffineResult:
    states: list
    status: str

    @property
    def final(self):
        return self.states[-1]

    @property
    def objectives(self):
        return [s.objective for s in self.states[1:]]


def affine_init(p, M=1e4, beta=0.997, epsilon=0.01):
    """Augmented system and all-ones start for problem ``p``."""
    A = np.asarray(p.A, dtype=float)
    b = np.asarray(p.b, dtype=float)
    c = np.asarray(p.c, dtype=float)
    m, n = A.shape
    K = np.hstack([A.T, -np.eye(n)])
    artificial = c - K @ np.ones(m + n)
    A0 = np.hstack([K, artificial[:, None]])
    c0 = np.concatenate([b, np.zeros(n), [float(M)]])
    x = np.ones(m + n + 1)
    return AffineState(0, x, float(c0 @ x), A0, c0, c, float(beta),
                       float(epsilon), float(M))


def affine_step(st):
    """One affine-scaling iteration.

    Computes ``P = (A0 X^2 A0^T)^{-1} A0 X^2 c0`` and ``r = c0 - A0^T P``.
    If ``r > 0`` and ``e^T X r < epsilon`` the state is returned with
    status ``"Optimal"``; if ``-X^2 r >= 0`` with status ``"Unbounded"``;
    otherwise ``x`` moves to ``x - beta X^2 r / ||X r||``.

    Raises
    ------
    NumericalFailure
        If the normal matrix is singular or the step degenerates.
    """
    x = st.x
    X2 = x * x
    P = solve((st.A0 * X2) @ st.A0.T, st.A0 @ (X2 * st.c0))
    r = st.c0 - st.A0.T @ P
    if np.all(r > 0) and float(np.sum(x * r)) < st.epsilon:
        return replace(st, status=OPTIMAL)
    if np.all(-X2 * r >= 0):
        return replace(st, status=UNBOUNDED)
    scale = np.linalg.norm(x * r)
    if not np.isfinite(scale) or scale == 0:
        raise NumericalFailure("degenerate affine-scaling step")
    x_new = x - st.beta * X2 * r / scale
    if np.isnan(x_new).any():
        raise NumericalFailure("NaN in affine-scaling iterate")
    return replace(st, k=st.k + 1, x=x_new, objective=float(st.c0 @ x_new))


def affine_solve(p, M=1e4, beta=0.997, epsilon=0.01, max_iters=50):
    """Iterate :func:`affine_step` until a check fires or ``max_iters``.

    A :class:`NumericalFailure` raised mid-run carries the iterates reached
    so far as ``exc.result``.
    """
    states = [affine_init(p, M, beta, epsilon)]
    for _ in range(max_iters):
        try:
            nxt = affine_step(states[-1])
        except NumericalFailure as exc:
            exc.result = AffineResult(states, NUMERICAL_FAILURE)
            raise
        if nxt.status is not None:
            return AffineResult(states, nxt.status)
        states.append(nxt)
    return AffineResult(states, MAX_ITERATIONS)


class AffineScalingSolver(BaseEstimator):
    """Estimator wrapper around :func:`affine_solve`.

    Attributes
    ----------
    result_ : AffineResult
    x_ : ndarray
        Final dual iterate ``y`` (first ``m`` entries of the state).
    objective_ : float
        Augmented objective ``c0^T x`` at the final iterate.
    status_ : str
    n_iter_ : int
    """

    def __init__(self, big_m=1e4, beta=0.997, epsilon=0.01, max_iter=50):
        self.big_m = big_m
        self.beta = beta
        self.epsilon = epsilon
        self.max_iter = max_iter

    def fit(self, problem):
        if not isinstance(problem, PrimalProblem):
            raise TypeError("problem must be a PrimalProblem")
        self.result_ = affine_solve(problem, self.big_m, self.beta,
                                    self.epsilon, self.max_iter)
        final = self.result_.final
        self.x_ = final.x[:problem.m]
        self.objective_ = final.objective
        self.status_ = self.result_.status
        self.n_iter_ = final.k
        return self
