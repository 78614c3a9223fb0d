"""Dense linear algebra kernel shared by every solver.

Two arithmetic modes are supported and selected per call site by the array
dtype:

* ``"rational"`` -- ``numpy`` object arrays holding :class:`fractions.Fraction`
  entries. Every operation is exact.
* ``"float"`` -- ordinary ``float64`` arrays.

Integer arrays are promoted to rational mode, floating arrays stay in float
mode. All functions return fresh arrays and never mutate their inputs.
"""
from fractions import Fraction
from numbers import Rational

import numpy as np

RATIONAL = "rational"
FLOAT = "float"
ARITHMETICS = (RATIONAL, FLOAT)

#: Default feasibility / pivot tolerance per arithmetic mode.
DEFAULT_TOL = {RATIONAL: Fraction(0), FLOAT: 1e-9}

# relative singularity threshold for float Gauss-Jordan
SINGULAR_RTOL = 1e-12


class NumericalFailure(ArithmeticError):
    """A floating computation produced NaN or could not be carried out."""


class SingularMatrixError(NumericalFailure):
    """Raised when elimination runs out of usable pivots."""


def check_arithmetic(arithmetic):
    if arithmetic not in ARITHMETICS:
        raise ValueError(
            f"arithmetic must be one of {ARITHMETICS}, got {arithmetic!r}")
    return arithmetic


def infer_arithmetic(*arrays):
    """Return ``"float"`` if any argument holds floats, else ``"rational"``."""
    for a in arrays:
        a = np.asarray(a)
        if a.dtype.kind in "fc":
            return FLOAT
        if a.dtype == object and any(isinstance(v, float) for v in a.flat):
            return FLOAT
    return RATIONAL


def is_exact(a):
    return np.asarray(a).dtype == object


def arithmetic_of(a):
    return RATIONAL if is_exact(a) else FLOAT


def default_tol(arithmetic):
    return DEFAULT_TOL[check_arithmetic(arithmetic)]


def to_scalar(value, arithmetic):
    """Coerce one number (int, Fraction, float, numeric string) to a scalar."""
    if arithmetic == RATIONAL:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (float, np.floating)):
            if not np.isfinite(value):
                raise NumericalFailure(f"non-finite value {value!r}")
            return Fraction(float(value))
        if isinstance(value, np.integer):
            return Fraction(int(value))
        if isinstance(value, Rational):
            return Fraction(value)
        return Fraction(value)
    check_arithmetic(arithmetic)
    out = float(value)
    if np.isnan(out):
        raise NumericalFailure("NaN encountered")
    return out


def as_array(values, arithmetic=None, ndim=None):
    """Convert ``values`` to an array in the requested arithmetic mode.

    Parameters
    ----------
    values : array_like
        Nested sequence or array of numbers.
    arithmetic : {"rational", "float"}, optional
        Target mode. Inferred from ``values`` when omitted.
    ndim : int, optional
        Required number of dimensions.
    """
    if arithmetic is None:
        arithmetic = infer_arithmetic(values)
    check_arithmetic(arithmetic)
    if arithmetic == RATIONAL:
        raw = np.asarray(values, dtype=object)
        out = np.empty(raw.shape, dtype=object)
        for idx, v in np.ndenumerate(raw):
            out[idx] = to_scalar(v, RATIONAL)
    else:
        out = np.array(values, dtype=float)
        if np.isnan(out).any():
            raise NumericalFailure("NaN encountered")
    if ndim is not None and out.ndim != ndim:
        raise ValueError(f"expected a {ndim}-d array, got shape {out.shape}")
    return out


def zeros(shape, arithmetic):
    if check_arithmetic(arithmetic) == RATIONAL:
        out = np.empty(shape, dtype=object)
        out.fill(Fraction(0))
        return out
    return np.zeros(shape)


def identity(n, arithmetic):
    out = zeros((n, n), arithmetic)
    for i in range(n):
        out[i, i] = Fraction(1) if arithmetic == RATIONAL else 1.0
    return out


def check_finite(a):
    """Raise :class:`NumericalFailure` if a float array contains NaN."""
    a = np.asarray(a)
    if a.dtype.kind == "f" and np.isnan(a).any():
        raise NumericalFailure("NaN encountered")
    return a


def inner(u, v):
    """Inner product of two equal-length vectors."""
    u = np.asarray(u)
    v = np.asarray(v)
    if u.ndim != 1 or v.ndim != 1:
        raise ValueError("inner expects 1-d vectors")
    if u.shape != v.shape:
        raise ValueError(f"length mismatch: {u.shape[0]} vs {v.shape[0]}")
    if is_exact(u) or is_exact(v):
        return sum((a * b for a, b in zip(u, v)), Fraction(0))
    out = float(np.dot(u, v))
    if np.isnan(out):
        raise NumericalFailure("NaN in inner product")
    return out


def matmul(A, B):
    """Matrix product ``A @ B``; exact when either operand is rational."""
    A = np.asarray(A)
    B = np.asarray(B)
    if A.ndim != 2 or B.ndim != 2:
        raise ValueError("matmul expects 2-d matrices")
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch: {A.shape} @ {B.shape}")
    if is_exact(A) or is_exact(B):
        out = zeros((A.shape[0], B.shape[1]), RATIONAL)
        for i in range(A.shape[0]):
            for j in range(B.shape[1]):
                out[i, j] = sum((A[i, k] * B[k, j] for k in range(A.shape[1])),
                                Fraction(0))
        return out
    return check_finite(A @ B)


def matvec(A, x):
    A = np.asarray(A)
    x = np.asarray(x)
    if A.ndim != 2 or x.ndim != 1 or A.shape[1] != x.shape[0]:
        raise ValueError(f"shape mismatch: {A.shape} @ {x.shape}")
    if is_exact(A) or is_exact(x):
        out = zeros(A.shape[0], RATIONAL)
        for i in range(A.shape[0]):
            out[i] = inner(A[i], x)
        return out
    return check_finite(A @ x)


def _pivot_threshold(M):
    # per-column scale taken from the initial matrix
    scale = np.abs(M).max(axis=0) if M.size else np.zeros(M.shape[1])
    return SINGULAR_RTOL * scale


def _eliminate(M, R):
    """Gauss-Jordan reduce square ``M`` while applying the same row
    operations to ``R``. Returns the reduced ``R``."""
    n = M.shape[0]
    exact = is_exact(M)
    thresholds = None if exact else _pivot_threshold(M)
    for col in range(n):
        if exact:
            pivot = next((r for r in range(col, n) if M[r, col] != 0), None)
        else:
            r = col + int(np.argmax(np.abs(M[col:, col])))
            pivot = r if abs(M[r, col]) > thresholds[col] and M[r, col] != 0 \
                else None
        if pivot is None:
            raise SingularMatrixError(f"no usable pivot in column {col}")
        if pivot != col:
            M[[col, pivot]] = M[[pivot, col]]
            R[[col, pivot]] = R[[pivot, col]]
        p = M[col, col]
        M[col] = M[col] / p
        R[col] = R[col] / p
        for r in range(n):
            if r != col and M[r, col] != 0:
                f = M[r, col]
                M[r] = M[r] - f * M[col]
                R[r] = R[r] - f * R[col]
    return R


def gauss_jordan_inverse(B):
    """Invert a square matrix by Gauss-Jordan elimination on ``(B | I)``.

    Rational input pivots on the first nonzero entry and is exact; float
    input uses partial pivoting and treats ``|pivot| < 1e-12 * max|column|``
    as singular.

    Raises
    ------
    SingularMatrixError
        If ``B`` is singular.
    """
    B = np.asarray(B)
    if B.ndim != 2 or B.shape[0] != B.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {B.shape}")
    arithmetic = arithmetic_of(B)
    M = as_array(B, arithmetic)
    return check_finite(_eliminate(M, identity(B.shape[0], arithmetic)))


def solve(A, b):
    """Solve the square system ``A x = b`` by Gauss-Jordan elimination."""
    A = np.asarray(A)
    b = np.asarray(b)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or b.shape != (A.shape[0],):
        raise ValueError(f"bad system shapes {A.shape}, {b.shape}")
    arithmetic = RATIONAL if is_exact(A) or is_exact(b) else FLOAT
    M = as_array(A, arithmetic)
    R = as_array(b, arithmetic).reshape(-1, 1)
    return check_finite(_eliminate(M, R)[:, 0])


def independent_columns(A, tol=None):
    """Greedy left-to-right selection of a maximal independent column set.

    Each column is reduced against the columns already kept; it is kept
    when a pivot survives. Rational input keeps any exactly nonzero
    residual; float input requires ``|pivot| > tol * max(1, max|column|)``.

    Returns
    -------
    list of int
        0-based indices of the kept columns, in increasing order.
    """
    A = np.asarray(A)
    if A.size == 0:
        return []
    if A.ndim != 2:
        raise ValueError("independent_columns expects a 2-d matrix")
    exact = is_exact(A)
    if tol is None:
        tol = DEFAULT_TOL[RATIONAL if exact else FLOAT]
    basis = []  # (pivot row, reduced column scaled to 1 at pivot)
    kept = []
    for j in range(A.shape[1]):
        v = A[:, j].copy()
        for p, w in basis:
            if v[p] != 0:
                v = v - v[p] * w
        if exact:
            p = next((i for i, x in enumerate(v) if x != 0), None)
        else:
            scale = max(1.0, float(np.abs(A[:, j]).max()))
            i = int(np.argmax(np.abs(v)))
            p = i if abs(v[i]) > tol * scale else None
        if p is None:
            continue
        basis.append((p, v / v[p]))
        kept.append(j)
    return kept


def rank(A, tol=None):
    return len(independent_columns(A, tol))


def format_scalar(value):
    """Render a scalar: rationals as ``p`` or ``p/q``, floats by ``repr``."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))
