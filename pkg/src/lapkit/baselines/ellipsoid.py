"""Perturbation bound for the ellipsoid method on the primal-dual system.

Only the bound is computed; no ellipsoid iterations are run.
"""
from fractions import Fraction
from operator import index


def ellipsoid_bound(n, U):
    """Exact ``1/epsilon = 2 (n+1) ((n+1) U)^(n+1)``.

    ``n`` is the number of variables and ``U`` an upper bound on the
    absolute values of the integer data.
    """
    n, U = index(n), index(U)
    if n < 1 or U < 1:
        raise ValueError("n and U must be positive integers")
    return 2 * (n + 1) * ((n + 1) * U) ** (n + 1)


def perturbation(n, U):
    """The perturbation ``epsilon`` as an exact fraction."""
    return Fraction(1, ellipsoid_bound(n, U))


def scaled_entry_bound(n, U):
    """Entry bound ``U / epsilon`` after clearing the perturbed data's
    common denominator."""
    return U * ellipsoid_bound(n, U)


def data_bound(*arrays):
    """Largest absolute entry over integer-valued data arrays."""
    values = [abs(v) for a in arrays for v in (a.flat if hasattr(a, "flat") else a)]
    if any(Fraction(v).denominator != 1 for v in values):
        raise ValueError("data must be integer-valued")
    return int(max(values))
