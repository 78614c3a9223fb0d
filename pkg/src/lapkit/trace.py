"""Line-oriented run traces.

Records, one per line, fields separated by single spaces::

    HEADER lap|simplex|affine|oracle <m> <n>
    STAGE <s> P <m values> T <t> JSTAR <list> SIGMA <list> D <m values> OBJ <v>
    PIVOT <k> ENTER <j> LEAVE <j> OBJ <v>
    ITER <k> OBJ <v>
    OPTIMUM P <m values> OBJ <v> CHECKED <count> FEASIBLE <count>
    STATUS <status>

Indices are 1-based, lists comma-separated, rationals printed as ``p/q``
and floats by their shortest round-trip ``repr``.
"""
from .baselines.affine import AffineResult
from .baselines.oracle import OracleResult
from .baselines.simplex import SimplexResult
from .lap import LapResult
from .numkit import format_scalar

OPTIMAL = "Optimal"


def _values(v):
    return " ".join(format_scalar(x) for x in v)


def _indices(ix):
    return ",".join(str(j) for j in ix)


def header(method, m, n):
    return f"HEADER {method} {m} {n}"


def stage_line(st):
    return (f"STAGE {st.s} P {_values(st.P)} T {format_scalar(st.t_star)} "
            f"JSTAR {_indices(st.j_star)} SIGMA {_indices(st.sigma_after)} "
            f"D {_values(st.d)} OBJ {format_scalar(st.objective)}")


def trace_lines(result, m=None, n=None, status=None):
    """Trace records for any solver result.

    ``m`` and ``n`` are required except for :class:`LapResult`, which
    carries its own dimensions. ``status`` overrides the status line (used
    for runs that ended in an error).
    """
    if isinstance(result, LapResult):
        lines = [header("lap", result.m, result.n)]
        lines += [stage_line(st) for st in result.trajectory]
        lines.append(f"STATUS {status or result.status}")
        return lines
    if m is None or n is None:
        raise ValueError("m and n are required for this result type")
    if isinstance(result, SimplexResult):
        lines = [header("simplex", m, n)]
        lines += [f"PIVOT {p.k} ENTER {p.entering + 1} LEAVE {p.leaving + 1} "
                  f"OBJ {format_scalar(p.objective)}" for p in result.pivot_log]
        lines.append(f"STATUS {status or OPTIMAL}")
        return lines
    if isinstance(result, AffineResult):
        lines = [header("affine", m, n)]
        lines += [f"ITER {s.k} OBJ {format_scalar(s.objective)}"
                  for s in result.states[1:]]
        lines.append(f"STATUS {status or result.status}")
        return lines
    if isinstance(result, OracleResult):
        return [
            header("oracle", m, n),
            f"OPTIMUM P {_values(result.argmin)} OBJ "
            f"{format_scalar(result.optimum)} CHECKED {result.vertices_checked}"
            f" FEASIBLE {result.feasible_vertices}",
            f"STATUS {status or OPTIMAL}",
        ]
    raise TypeError(f"cannot trace {type(result).__name__}")


def format_trace(result, m=None, n=None, status=None):
    return "\n".join(trace_lines(result, m, n, status)) + "\n"


def write_trace(result, path, m=None, n=None, status=None):
    """Write the trace for ``result`` to ``path`` (UTF-8, ``\\n`` endings)."""
    text = format_trace(result, m, n, status)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    return text


def failure_trace(method, m, n, status):
    """Header and status only, for runs that produced no records."""
    return f"{header(method, m, n)}\nSTATUS {status}\n"
