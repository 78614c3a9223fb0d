"""Seeded random small instances for tests and experiments."""
import numpy as np

from .model import PrimalProblem


def _matrix(rng, m, n, low, high):
    # zero columns would give zero facet normals
    A = rng.integers(low, high + 1, size=(m, n))
    while True:
        zero = ~A.any(axis=0)
        if not zero.any():
            return A
        A[:, zero] = rng.integers(low, high + 1, size=(m, int(zero.sum())))


def random_problem(seed, m, n, low=-4, high=9):
    """Integer instance with ``A`` entries in ``[low, high]`` and
    ``b`` in ``[0, high]`` (so the slack basis is feasible). No column of
    ``A`` is zero."""
    rng = np.random.default_rng(seed)
    A = _matrix(rng, m, n, low, high)
    b = rng.integers(0, high + 1, size=m)
    c = rng.integers(low, high + 1, size=n)
    return PrimalProblem(A.tolist(), b.tolist(), c.tolist())


def random_lap_instance(seed, m, n, low=-4, high=9):
    """Instance together with a dual-feasible integer start point.

    The start ``P0 >= 0`` is drawn first and each ``c_j`` is set below
    ``(A_j, P0)`` by a random nonnegative slack, sometimes zero so that the
    start touches a facet. ``b`` has at least one positive entry.
    """
    rng = np.random.default_rng(seed)
    A = _matrix(rng, m, n, low, high)
    P0 = rng.integers(0, 8, size=m)
    slack = rng.integers(0, 4, size=n) * rng.integers(0, 2, size=n)
    c = A.T @ P0 - slack
    b = rng.integers(0, high + 1, size=m)
    if not b.any():
        b[rng.integers(m)] = 1
    return PrimalProblem(A.tolist(), b.tolist(), c.tolist()), P0.tolist()
