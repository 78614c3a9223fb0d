"""Problem representation: primal/dual instances, facets, tableaus, files.

The primal problem is ``max{c^T x | A x <= b, x >= 0}``; its dual lives in
``R^m`` and is cut by ``n + m`` facets ``(tau_j, y) >= c_j``: the columns of
``A`` first, then the unit vectors that encode ``y >= 0``.
"""
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .numkit import (
    FLOAT, RATIONAL, as_array, arithmetic_of, check_arithmetic, default_tol,
    format_scalar, identity, inner, zeros,
)
from .validation import check_matrix, check_vector


class ProblemFormatError(ValueError):
    """Malformed problem file; ``line`` is the 1-based offending line."""

    def __init__(self, message, line=None):
        self.line = line
        self.message = message
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)


class NoSlackBasisError(ValueError):
    """The slack basis is infeasible because some ``b_i < 0``."""


def _freeze(a):
    a.flags.writeable = False
    return a


@dataclass(frozen=True, eq=False)
class PrimalProblem:
    """``max{c^T x | A x <= b, x >= 0}`` with ``A`` of shape ``(m, n)``."""

    A: np.ndarray
    b: np.ndarray
    c: np.ndarray

    def __post_init__(self):
        A = check_matrix(self.A, name="A")
        arithmetic = arithmetic_of(A)
        m, n = A.shape
        object.__setattr__(self, "A", _freeze(A))
        object.__setattr__(self, "b", _freeze(
            check_vector(self.b, arithmetic, length=m, name="b")))
        object.__setattr__(self, "c", _freeze(
            check_vector(self.c, arithmetic, length=n, name="c")))

    @property
    def m(self):
        return self.A.shape[0]

    @property
    def n(self):
        return self.A.shape[1]

    @property
    def arithmetic(self):
        return arithmetic_of(self.A)

    def astype(self, arithmetic):
        """Return a copy of the problem in another arithmetic mode."""
        check_arithmetic(arithmetic)
        return PrimalProblem(as_array(self.A, arithmetic),
                             as_array(self.b, arithmetic),
                             as_array(self.c, arithmetic))

    def __eq__(self, other):
        if not isinstance(other, PrimalProblem):
            return NotImplemented
        return (self.A.shape == other.A.shape
                and bool(np.all(self.A == other.A))
                and bool(np.all(self.b == other.b))
                and bool(np.all(self.c == other.c)))

    __hash__ = None


@dataclass(frozen=True, eq=False)
class Facet:
    """Hyperplane ``(tau, y) = c`` with accept zone ``(tau, y) >= c``.

    ``index`` is the 1-based position of the facet in its dual problem.
    """

    tau: np.ndarray
    c: object
    index: int

    def __post_init__(self):
        tau = check_vector(self.tau, name="tau")
        if all(v == 0 for v in tau):
            raise ValueError(f"facet {self.index}: zero normal vector")
        object.__setattr__(self, "tau", _freeze(tau))

    def slack(self, y):
        """``(tau, y) - c``; nonnegative inside the accept zone."""
        return inner(self.tau, y) - self.c


class DualProblem:
    """Dual instance ``min{(b, y) | (tau_j, y) >= c_j, j = 1..n+m}``.

    Parameters
    ----------
    b : array_like of shape (m,)
        Dual objective.
    facets : sequence of Facet
        Exactly ``n + m`` facets, normals of length ``m``.
    n : int
        Number of primal columns (facets that are not slack facets).
    """

    def __init__(self, b, facets, n):
        self.b = _freeze(check_vector(b, name="b"))
        self.facets = tuple(facets)
        self.n = int(n)
        m = self.b.shape[0]
        if len(self.facets) != self.n + m:
            raise ValueError(
                f"expected {self.n + m} facets, got {len(self.facets)}")
        for f in self.facets:
            if f.tau.shape != (m,):
                raise ValueError(f"facet {f.index}: normal has wrong length")
        self.normals = _freeze(np.column_stack([f.tau for f in self.facets]))
        self.offsets = _freeze(np.array([f.c for f in self.facets],
                                        dtype=self.normals.dtype))

    @classmethod
    def from_arrays(cls, A, b, c):
        """Build the dual of ``max{c^T x | A x <= b, x >= 0}``; ``A`` may
        have zero columns, leaving only the slack facets."""
        b = check_vector(b, name="b")
        arithmetic = arithmetic_of(b)
        m = b.shape[0]
        A = as_array(A, arithmetic).reshape(m, -1)
        n = A.shape[1]
        c = as_array(c, arithmetic).reshape(n)
        eye = identity(m, arithmetic)
        facets = [Facet(A[:, j], c[j], j + 1) for j in range(n)]
        zero = Fraction(0) if arithmetic == RATIONAL else 0.0
        facets += [Facet(eye[:, i], zero, n + i + 1) for i in range(m)]
        return cls(b, facets, n)

    @property
    def m(self):
        return self.b.shape[0]

    @property
    def arithmetic(self):
        return arithmetic_of(self.b)

    def facet(self, index):
        """Facet by 1-based index."""
        return self.facets[index - 1]

    def objective(self, y):
        return inner(self.b, y)

    def slacks(self, y):
        dtype = object if self.arithmetic == RATIONAL else float
        return np.array([f.slack(y) for f in self.facets], dtype=dtype)

    def astype(self, arithmetic):
        facets = [Facet(as_array(f.tau, arithmetic),
                        as_array([f.c], arithmetic)[0], f.index)
                  for f in self.facets]
        return DualProblem(as_array(self.b, arithmetic), facets, self.n)


def to_dual(p):
    """Dual facets of ``p``: columns of ``A`` with offsets ``c``, then the
    unit slack facets with offset 0."""
    return DualProblem.from_arrays(p.A, p.b, p.c)


def is_dual_feasible(d, y, tol=None):
    """True iff ``(tau_j, y) >= c_j - tol`` for every facet of ``d``."""
    y = check_vector(y, d.arithmetic, length=d.m, name="y")
    if tol is None:
        tol = default_tol(d.arithmetic)
    return all(f.slack(y) >= -tol for f in d.facets)


@dataclass(eq=False)
class SimplexTableau:
    """Full simplex tableau.

    ``grid`` has ``m`` constraint rows followed by the reduced-cost row,
    and ``n + m`` variable columns followed by the right-hand side. The
    cost row's right-hand entry holds the current value of ``c^T x``.
    ``basis[i]`` is the 0-based column basic in constraint row ``i``.
    """

    grid: np.ndarray
    basis: list

    @property
    def m(self):
        return self.grid.shape[0] - 1

    @property
    def n(self):
        return self.grid.shape[1] - 1 - self.m

    @property
    def rhs(self):
        return self.grid[:self.m, -1]

    @property
    def reduced_costs(self):
        return self.grid[self.m, :-1]

    @property
    def objective(self):
        return self.grid[self.m, -1]

    def copy(self):
        return SimplexTableau(self.grid.copy(), list(self.basis))

    def display_rows(self):
        """Rows in the usual printed layout: cost row first, and the
        right-hand side as the leading column of every row."""
        order = [self.m] + list(range(self.m))
        return [[self.grid[i, -1]] + list(self.grid[i, :-1]) for i in order]

    def primal_solution(self):
        """Values of ``x_1..x_n`` at the current basis."""
        x = zeros(self.n, arithmetic_of(self.grid))
        for row, col in enumerate(self.basis):
            if col < self.n:
                x[col] = self.grid[row, -1]
        return x


def build_tableau(p):
    """Initial tableau with the slack basis ``x = 0, s = b``."""
    if any(v < 0 for v in p.b):
        raise NoSlackBasisError(
            "no natural slack basis: b has a negative entry")
    m, n = p.m, p.n
    arithmetic = p.arithmetic
    grid = zeros((m + 1, n + m + 1), arithmetic)
    grid[:m, :n] = p.A
    grid[:m, n:n + m] = identity(m, arithmetic)
    grid[:m, -1] = p.b
    grid[m, :n] = -p.c
    return SimplexTableau(grid, list(range(n, n + m)))


# --------------------------------------------------------------------------
# problem files

_NUMBER = re.compile(
    r"[+-]?(?:\d+/\d+|(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\Z")


def parse_number(token, line=None):
    """Parse an integer, decimal or ``p/q`` token into an exact Fraction."""
    if not _NUMBER.match(token):
        raise ProblemFormatError(f"non-numeric token {token!r}", line)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ProblemFormatError(f"zero denominator in {token!r}", line) from None


def _numbers(tokens, count, what, line):
    if len(tokens) != count:
        raise ProblemFormatError(
            f"dimension mismatch: {what} has {len(tokens)} entries, "
            f"expected {count}", line)
    return [parse_number(t, line) for t in tokens]


def parse_problem(text):
    """Parse a problem file.

    Parameters
    ----------
    text : str or bytes
        File contents (UTF-8 when bytes).

    Returns
    -------
    problem : PrimalProblem
        Rational-mode problem.
    start : ndarray or None
        Dual start point from the ``start`` directive, if present.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ProblemFormatError(f"not valid UTF-8 ({exc})") from None
    lines = [(i + 1, ln.split("#", 1)[0].split())
             for i, ln in enumerate(text.splitlines())]
    lines = [(no, toks) for no, toks in lines if toks]

    m = n = None
    A = b = c = start = None
    it = iter(lines)
    for no, toks in it:
        key, rest = toks[0], toks[1:]
        if key != "dim" and m is None:
            raise ProblemFormatError(f"'{key}' before 'dim'", no)
        if key == "dim":
            if m is not None:
                raise ProblemFormatError("duplicate 'dim'", no)
            if len(rest) != 2 or not all(t.isdigit() for t in rest):
                raise ProblemFormatError("expected 'dim <m> <n>'", no)
            m, n = int(rest[0]), int(rest[1])
            if m < 1 or n < 1:
                raise ProblemFormatError("dimensions must be positive", no)
        elif key == "A":
            if A is not None:
                raise ProblemFormatError("duplicate 'A'", no)
            if rest:
                raise ProblemFormatError("'A' takes no inline values", no)
            A = []
            for _ in range(m):
                try:
                    row_no, row = next(it)
                except StopIteration:
                    raise ProblemFormatError(
                        f"dimension mismatch: A needs {m} rows", no) from None
                A.append(_numbers(row, n, "A row", row_no))
        elif key in ("b", "c", "start"):
            if {"b": b, "c": c, "start": start}[key] is not None:
                raise ProblemFormatError(f"duplicate '{key}'", no)
            values = _numbers(rest, n if key == "c" else m, key, no)
            if key == "b":
                b = values
            elif key == "c":
                c = values
            else:
                start = values
        else:
            raise ProblemFormatError(f"unknown directive {key!r}", no)

    eof = (lines[-1][0] + 1) if lines else 1
    for key, value in (("dim", m), ("A", A), ("b", b), ("c", c)):
        if value is None:
            raise ProblemFormatError(f"missing '{key}' directive", eof)
    problem = PrimalProblem(A, b, c)
    if start is not None:
        start = as_array(start, RATIONAL)
    return problem, start


def format_problem(p, start=None):
    """Canonical text serialization; :func:`parse_problem` inverts it."""
    def row(values):
        return " ".join(format_scalar(v) for v in values)

    out = [f"dim {p.m} {p.n}", "A"]
    out += [row(r) for r in p.A]
    out.append("b " + row(p.b))
    out.append("c " + row(p.c))
    if start is not None:
        out.append("start " + row(start))
    return "\n".join(out) + "\n"


def read_problem(path):
    with open(path, "rb") as fh:
        return parse_problem(fh.read())


__all__ = [
    "PrimalProblem", "Facet", "DualProblem", "SimplexTableau",
    "ProblemFormatError", "NoSlackBasisError", "to_dual", "is_dual_feasible",
    "build_tableau", "parse_problem", "format_problem", "read_problem",
    "parse_number", "FLOAT", "RATIONAL",
]
