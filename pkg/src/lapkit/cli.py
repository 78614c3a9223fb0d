"""Command-line front end.

Exit codes: 0 solved, 1 infeasible or unbounded, 2 bad input, 3 numerical
failure or iteration limit.
"""
import argparse
import sys
from dataclasses import dataclass

from .baselines.affine import MAX_ITERATIONS as AFFINE_MAX, affine_solve
from .baselines.oracle import NoFeasibleVertexError, oracle_solve
from .baselines.simplex import PivotLimitError, UnboundedError, simplex_solve
from .lap import (
    DIRECTION_VANISHED, FULLY_BLOCKED, MAX_ITERATIONS, UNBLOCKED,
    InfeasibleStartError, solve_lap,
)
from .model import (
    NoSlackBasisError, ProblemFormatError, build_tableau, parse_number,
    read_problem, to_dual,
)
from .numkit import FLOAT, RATIONAL, NumericalFailure, as_array, format_scalar
from .trace import failure_trace, format_trace

METHODS = ("lap", "simplex", "affine", "oracle")

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3

_LAP_EXIT = {FULLY_BLOCKED: EXIT_OK, DIRECTION_VANISHED: EXIT_OK,
             UNBLOCKED: EXIT_INFEASIBLE, MAX_ITERATIONS: EXIT_NUMERIC}


class InputError(ValueError):
    pass


@dataclass
class RunConfig:
    method: str
    input_path: str
    start: list = None
    tol: str = None
    max_iters: int = None
    arithmetic: str = RATIONAL
    trace_path: str = None
    big_m: str = "10000"
    beta: str = "0.997"
    epsilon: str = "0.01"

    def __post_init__(self):
        if self.method not in METHODS + ("compare",):
            raise InputError(f"unknown method {self.method!r}")
        if self.method == "affine":
            self.arithmetic = FLOAT


@dataclass
class Outcome:
    method: str
    code: int
    status: str
    report: str
    objective: object = None
    steps: int = None
    trace: str = None


def _tol(cfg, arithmetic):
    if cfg.tol is None:
        return None
    value = parse_number(str(cfg.tol))
    return value if arithmetic == RATIONAL else float(value)


def _points(v):
    return " ".join(format_scalar(x) for x in v)


def _run_lap(cfg, problem, start):
    m, n = problem.m, problem.n
    if cfg.start is not None:
        start = [parse_number(str(t)) for t in cfg.start]
    if start is None:
        raise InputError("method lap needs a start point: add a 'start' "
                         "line to the input or pass --start")
    if len(start) != m:
        raise InputError(f"start has {len(start)} entries, expected {m}")
    arith = cfg.arithmetic
    dual = to_dual(problem.astype(arith))
    try:
        res = solve_lap(dual, as_array(start, arith), tol=_tol(cfg, arith),
                        max_iters=cfg.max_iters)
    except InfeasibleStartError as exc:
        return Outcome("lap", EXIT_INFEASIBLE, "Infeasible", f"error: {exc}",
                       trace=failure_trace("lap", m, n, "Infeasible"))
    stages = len(res.trajectory)
    report = (f"optimal point {_points(res.final_point)}, objective "
              f"{format_scalar(res.final_objective)}, stages {stages}\n"
              f"status {res.status}")
    return Outcome("lap", _LAP_EXIT[res.status], res.status, report,
                   res.final_objective, stages, format_trace(res))


def _run_simplex(cfg, problem, start):
    m, n = problem.m, problem.n
    arith = cfg.arithmetic
    p = problem.astype(arith)
    max_pivots = cfg.max_iters or 200
    try:
        res = simplex_solve(build_tableau(p), max_pivots, _tol(cfg, arith))
    except NoSlackBasisError as exc:
        return Outcome("simplex", EXIT_INFEASIBLE, "Infeasible",
                       f"error: {exc}",
                       trace=failure_trace("simplex", m, n, "Infeasible"))
    except UnboundedError as exc:
        return Outcome("simplex", EXIT_INFEASIBLE, "Unbounded",
                       f"unbounded: {exc}",
                       trace=failure_trace("simplex", m, n, "Unbounded"))
    except PivotLimitError as exc:
        return Outcome("simplex", EXIT_NUMERIC, "MaxIterations",
                       f"error: {exc}",
                       trace=failure_trace("simplex", m, n, "MaxIterations"))
    pivots = len(res.pivot_log)
    report = (f"optimal point {_points(res.x)}, objective "
              f"{format_scalar(res.objective)}, pivots {pivots}\nstatus Optimal")
    return Outcome("simplex", EXIT_OK, "Optimal", report, res.objective,
                   pivots, format_trace(res, m, n))


def _run_affine(cfg, problem, start):
    m, n = problem.m, problem.n
    max_iters = cfg.max_iters or 50
    try:
        res = affine_solve(problem, M=float(parse_number(str(cfg.big_m))),
                           beta=float(parse_number(str(cfg.beta))),
                           epsilon=float(parse_number(str(cfg.epsilon))),
                           max_iters=max_iters)
        code = {"Optimal": EXIT_OK, "Unbounded": EXIT_INFEASIBLE,
                AFFINE_MAX: EXIT_NUMERIC}[res.status]
        note = ""
    except NumericalFailure as exc:
        res = getattr(exc, "result", None)
        if res is None:
            raise
        code = EXIT_NUMERIC
        note = f"\nnumerical failure: {exc}"
    final = res.final
    report = (f"point {_points(final.x[:m])}, objective "
              f"{format_scalar(final.objective)}, iterations {final.k}\n"
              f"status {res.status}{note}")
    return Outcome("affine", code, res.status, report, final.objective,
                   final.k, format_trace(res, m, n))


def _run_oracle(cfg, problem, start):
    m, n = problem.m, problem.n
    try:
        res = oracle_solve(to_dual(problem.astype(RATIONAL)))
    except NoFeasibleVertexError as exc:
        return Outcome("oracle", EXIT_INFEASIBLE, "Infeasible",
                       f"error: {exc}",
                       trace=failure_trace("oracle", m, n, "Infeasible"))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = (f"optimal point {_points(res.argmin)}, objective "
              f"{format_scalar(res.optimum)}, vertices {res.vertices_checked}"
              "\nstatus Optimal")
    return Outcome("oracle", EXIT_OK, "Optimal", report, res.optimum,
                   res.vertices_checked, format_trace(res, m, n))


_RUNNERS = {"lap": _run_lap, "simplex": _run_simplex, "affine": _run_affine,
            "oracle": _run_oracle}


def _compare(cfg, problem, start):
    rows = []
    for method in METHODS:
        sub = RunConfig(method, cfg.input_path, cfg.start, cfg.tol,
                        cfg.max_iters, cfg.arithmetic, None, cfg.big_m,
                        cfg.beta, cfg.epsilon)
        try:
            rows.append(_RUNNERS[method](sub, problem, start))
        except InputError as exc:
            rows.append(Outcome(method, EXIT_INPUT, "Skipped", str(exc)))
    lines = [f"{'method':<8} {'objective':>24} {'steps':>6}  status"]
    for o in rows:
        obj = "-" if o.objective is None else format_scalar(o.objective)
        steps = "-" if o.steps is None else str(o.steps)
        lines.append(f"{o.method:<8} {obj:>24} {steps:>6}  {o.status}")
    trace = "".join(o.trace for o in rows if o.trace)
    return Outcome("compare", EXIT_OK, "Done", "\n".join(lines), trace=trace)


def run(cfg, out=None, err=None):
    """Execute one configuration; returns the process exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        problem, start = read_problem(cfg.input_path)
        if cfg.method == "compare":
            outcome = _compare(cfg, problem, start)
        else:
            outcome = _RUNNERS[cfg.method](cfg, problem, start)
    except (OSError, ProblemFormatError, InputError) as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except NumericalFailure as exc:
        print(f"numerical failure: {exc}", file=err)
        return EXIT_NUMERIC
    print(outcome.report, file=out)
    if cfg.trace_path and outcome.trace is not None:
        try:
            with open(cfg.trace_path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(outcome.trace)
        except OSError as exc:
            print(f"error: cannot write trace: {exc}", file=err)
            return EXIT_INPUT
    return outcome.code


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lapkit",
        description="Linear adjusting programming and LP baselines.")
    sub = parser.add_subparsers(dest="command", required=True)
    s = sub.add_parser("solve", help="solve a problem file")
    s.add_argument("--method", required=True,
                   choices=METHODS + ("compare",))
    s.add_argument("--input", required=True, dest="input_path")
    s.add_argument("--start", nargs="+", default=None,
                   help="dual start point (m numbers), overrides the file")
    s.add_argument("--tol", default=None,
                   help="tolerance (default 0 rational, 1e-9 float)")
    s.add_argument("--max-iters", type=int, default=None, dest="max_iters",
                   help="lap: m+5, simplex: 200, affine: 50")
    s.add_argument("--arithmetic", choices=(RATIONAL, FLOAT),
                   default=RATIONAL)
    s.add_argument("--trace", default=None, dest="trace_path")
    s.add_argument("--big-m", default="10000", dest="big_m")
    s.add_argument("--beta", default="0.997")
    s.add_argument("--epsilon", default="0.01")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.max_iters is not None and args.max_iters < 1:
        print("error: --max-iters must be positive", file=sys.stderr)
        return EXIT_INPUT
    if args.start is not None:
        args.start = [t for tok in args.start for t in tok.replace(",", " ").split()]
    cfg = RunConfig(args.method, args.input_path, args.start, args.tol,
                    args.max_iters, args.arithmetic, args.trace_path,
                    args.big_m, args.beta, args.epsilon)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
