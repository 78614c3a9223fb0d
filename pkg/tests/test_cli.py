import subprocess
import sys
from fractions import Fraction as F

import pytest

from lapkit.cli import EXIT_INFEASIBLE, EXIT_INPUT, EXIT_NUMERIC, EXIT_OK, main
from lapkit.numkit import inner


def _write(tmp_path, text, name="p.lpt"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_lap_report(example_file, capsys):
    assert main(["solve", "--method", "lap", "--input", example_file]) == EXIT_OK
    out = capsys.readouterr().out
    assert "optimal point 0 3 0 0 1, objective 5, stages 3" in out
    assert "status FullyBlocked" in out


def test_lap_trace(example_file, tmp_path):
    trace = tmp_path / "t.txt"
    main(["solve", "--method", "lap", "--input", example_file,
          "--trace", str(trace)])
    lines = trace.read_text().splitlines()
    assert lines[0] == "HEADER lap 5 5"
    assert lines[1] == ("STAGE 1 P 3 3 3 0 3 T 1 JSTAR 4,9 SIGMA 4,9 "
                        "D -4 -1 -4 -6 -2 OBJ 33")
    assert lines[2].startswith("STAGE 2 P 0 33/13 6/13 0 21/13 T 9/13 JSTAR 6 ")
    assert lines[3].startswith("STAGE 3 P 0 3 0 0 1 T 4/13 JSTAR 1,5,8 ")
    assert lines[-1] == "STATUS FullyBlocked"


def test_trace_objective_recomputes(example_file, tmp_path, problem):
    trace = tmp_path / "t.txt"
    main(["solve", "--method", "lap", "--input", example_file,
          "--trace", str(trace)])
    for line in trace.read_text().splitlines():
        if not line.startswith("STAGE"):
            continue
        tok = line.split()
        P = [F(v) for v in tok[tok.index("P") + 1:tok.index("T")]]
        assert inner(problem.b, P) == F(tok[tok.index("OBJ") + 1])


def test_trace_is_byte_identical(example_file, tmp_path):
    blobs = []
    for i in range(2):
        path = tmp_path / f"t{i}.txt"
        main(["solve", "--method", "lap", "--input", example_file,
              "--trace", str(path)])
        blobs.append(path.read_bytes())
    assert blobs[0] == blobs[1]
    assert b"\r" not in blobs[0]


def test_start_override(example_file, capsys):
    code = main(["solve", "--method", "lap", "--input", example_file,
                 "--start", "0,3,0,0,1"])
    assert code == EXIT_OK
    assert "stages 0" in capsys.readouterr().out


def test_start_override_bad_length(example_file, capsys):
    code = main(["solve", "--method", "lap", "--input", example_file,
                 "--start", "1", "2"])
    assert code == EXIT_INPUT
    assert "expected 5" in capsys.readouterr().err


def test_missing_start(tmp_path, capsys):
    path = _write(tmp_path, "dim 1 1\nA\n1\nb 1\nc 1\n")
    assert main(["solve", "--method", "lap", "--input", path]) == EXIT_INPUT
    assert "needs a start point" in capsys.readouterr().err


def test_infeasible_start(example_file, tmp_path, capsys):
    trace = tmp_path / "t.txt"
    code = main(["solve", "--method", "lap", "--input", example_file,
                 "--start", "0", "0", "0", "0", "0", "--trace", str(trace)])
    assert code == EXIT_INFEASIBLE
    assert trace.read_text() == "HEADER lap 5 5\nSTATUS Infeasible\n"


def test_unblocked_exit(tmp_path):
    path = _write(tmp_path, "dim 1 1\nA\n1\nb -1\nc 0\nstart 5\n")
    assert main(["solve", "--method", "lap", "--input", path]) == EXIT_INFEASIBLE


def test_lap_max_iters(example_file):
    code = main(["solve", "--method", "lap", "--input", example_file,
                 "--max-iters", "1"])
    assert code == EXIT_NUMERIC


def test_lap_float(example_file, capsys):
    code = main(["solve", "--method", "lap", "--input", example_file,
                 "--arithmetic", "float"])
    assert code == EXIT_OK
    assert "status FullyBlocked" in capsys.readouterr().out


def test_simplex(example_file, tmp_path, capsys):
    trace = tmp_path / "t.txt"
    code = main(["solve", "--method", "simplex", "--input", example_file,
                 "--trace", str(trace)])
    assert code == EXIT_OK
    assert "optimal point 2 0 0 1 0, objective 5, pivots 4" in capsys.readouterr().out
    lines = trace.read_text().splitlines()
    assert lines[1] == "PIVOT 1 ENTER 1 LEAVE 6 OBJ 2"
    assert lines[4] == "PIVOT 4 ENTER 6 LEAVE 7 OBJ 5"
    assert lines[-1] == "STATUS Optimal"


def test_simplex_negative_b(tmp_path):
    path = _write(tmp_path, "dim 1 1\nA\n1\nb -1\nc 1\n")
    assert main(["solve", "--method", "simplex", "--input", path]) == EXIT_INFEASIBLE


def test_simplex_unbounded(tmp_path, capsys):
    path = _write(tmp_path, "dim 1 1\nA\n-1\nb 1\nc 1\n")
    assert main(["solve", "--method", "simplex", "--input", path]) == EXIT_INFEASIBLE
    assert "unbounded" in capsys.readouterr().out


def test_affine_ten_iterations(example_file, tmp_path, capsys):
    trace = tmp_path / "t.txt"
    code = main(["solve", "--method", "affine", "--input", example_file,
                 "--max-iters", "10", "--trace", str(trace)])
    assert code == EXIT_NUMERIC  # iteration limit
    lines = trace.read_text().splitlines()
    assert len([ln for ln in lines if ln.startswith("ITER")]) == 10
    assert lines[-1] == "STATUS MaxIterations"


def test_affine_default_run_fails_numerically(example_file, capsys):
    code = main(["solve", "--method", "affine", "--input", example_file])
    assert code == EXIT_NUMERIC
    assert "numerical failure" in capsys.readouterr().out


def test_oracle(example_file, tmp_path, capsys):
    trace = tmp_path / "t.txt"
    code = main(["solve", "--method", "oracle", "--input", example_file,
                 "--trace", str(trace)])
    assert code == EXIT_OK
    assert "objective 5, vertices 252" in capsys.readouterr().out
    assert trace.read_text().splitlines()[1].startswith(
        "OPTIMUM P 0 3 0 0 1 OBJ 5 CHECKED 252")


def test_oracle_too_large(tmp_path):
    rows = "\n".join(["1"] * 9)
    path = _write(tmp_path, f"dim 9 1\nA\n{rows}\nb {' '.join(['1'] * 9)}\nc 1\n")
    assert main(["solve", "--method", "oracle", "--input", path]) == EXIT_INPUT


def test_compare(example_file, capsys):
    assert main(["solve", "--method", "compare", "--input", example_file]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].split() == ["method", "objective", "steps", "status"]
    assert [ln.split()[0] for ln in out[1:]] == ["lap", "simplex", "affine",
                                                 "oracle"]
    assert out[1].split()[1:] == ["5", "3", "FullyBlocked"]
    assert out[2].split()[1:] == ["5", "4", "Optimal"]


@pytest.mark.parametrize("text, line", [
    ("dim 2 2\nA\n1 2\n3\nb 1 1\nc 1 1\n", 4),
    ("dim 1 1\nA\n1\nb x\nc 1\n", 4),
])
def test_bad_file_exit_code(tmp_path, capsys, text, line):
    path = _write(tmp_path, text)
    assert main(["solve", "--method", "lap", "--input", path]) == EXIT_INPUT
    assert f"line {line}:" in capsys.readouterr().err


def test_missing_file(capsys):
    assert main(["solve", "--method", "lap", "--input", "/no/such"]) == EXIT_INPUT


def test_bad_max_iters(example_file):
    assert main(["solve", "--method", "lap", "--input", example_file,
                 "--max-iters", "0"]) == EXIT_INPUT


def test_unknown_method_rejected(example_file):
    with pytest.raises(SystemExit) as info:
        main(["solve", "--method", "newton", "--input", example_file])
    assert info.value.code == 2


def test_module_entry_point(example_file):
    proc = subprocess.run(
        [sys.executable, "-m", "lapkit", "solve", "--method", "lap",
         "--input", example_file], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "objective 5" in proc.stdout
