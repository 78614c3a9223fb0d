from fractions import Fraction as F

import numpy as np
import pytest
from sklearn.base import clone

from lapkit.lap import (
    DIRECTION_VANISHED, FULLY_BLOCKED, MAX_ITERATIONS, UNBLOCKED,
    InfeasibleStartError, LAPSolver, advance, next_stage, solve_lap,
)
from lapkit.model import DualProblem, Facet, is_dual_feasible

g = [-4, -1, -4, -6, -2]
P1 = [3, 3, 3, 0, 3]
P2 = [0, F(33, 13), F(6, 13), 0, F(21, 13)]
P3 = [0, 3, 0, 0, 1]
d1 = [F(-13, 3), F(-2, 3), F(-11, 3), 0, -2]
d2 = [0, F(3, 2), F(-3, 2), 0, -2]


def test_first_stage(dual, start):
    assert next_stage(dual, start, g) == (1, (4, 9))


def test_second_stage(dual):
    assert next_stage(dual, P1, d1, sigma=[4, 9]) == (F(9, 13), (6,))


def test_second_stage_unscaled_direction(dual):
    # same facet and point, step length divided by the scale factor
    t, j = next_stage(dual, P1, [-13, -2, -11, 0, -6], sigma=[4, 9])
    assert (t, j) == (F(3, 13), (6,))
    assert advance(P1, np.array([-13, -2, -11, 0, -6], dtype=object),
                   t).tolist() == P2


def test_third_stage_tie_set(dual):
    t, j = next_stage(dual, P2, d2, sigma=[4, 9, 6])
    assert t == F(4, 13)
    assert j == (1, 5, 8)


def test_third_stage_without_sigma_sees_facet_9(dual):
    # facet 9 is tangent to d2, so it never appears in a tie set
    t, j = next_stage(dual, P2, d2)
    assert 9 not in j


def test_next_stage_zero_direction(dual, start):
    with pytest.raises(ValueError, match="zero"):
        next_stage(dual, start, [0] * 5)


def test_next_stage_unblocked():
    d = DualProblem([-1], [Facet([1], 0, 1)], 0)
    assert next_stage(d, [5], [1]) is None


def test_advance():
    P = np.array([F(1), F(2)], dtype=object)
    assert advance(P, np.array([F(1, 2), F(-1)], dtype=object),
                   F(2)).tolist() == [2, 0]
    with pytest.raises(ValueError):
        advance(P, P, -1)


def test_worked_example_trajectory(dual, start):
    res = solve_lap(dual, start, g)
    assert res.status == FULLY_BLOCKED
    assert [st.P.tolist() for st in res.trajectory] == [P1, P2, P3]
    assert [st.j_star for st in res.trajectory] == [(4, 9), (6,), (1, 5, 8)]
    assert [st.t_star for st in res.trajectory] == [1, F(9, 13), F(4, 13)]
    assert [st.d.tolist() for st in res.trajectory] == [g, d1, d2]
    assert [st.objective for st in res.trajectory] == [33, F(99, 13), 5]
    assert res.final_objective == 5
    assert res.sigma == (4, 9, 6, 1, 5, 8)


def test_default_goal_is_minus_b(dual, start):
    assert solve_lap(dual, start).final_point.tolist() == P3


def test_float_mode(dual, start):
    res = solve_lap(dual.astype("float"), np.array(start, dtype=float))
    assert res.status == FULLY_BLOCKED
    assert np.allclose(res.final_point.astype(float), P3)
    assert [st.j_star for st in res.trajectory] == [(4, 9), (6,), (1, 5, 8)]


def test_vertex_start_is_blocked_immediately(dual):
    res = solve_lap(dual, P3)
    assert res.status == FULLY_BLOCKED
    assert res.trajectory == []
    assert res.final_objective == 5


def test_one_dimensional_single_facet():
    d = DualProblem([1], [Facet([1], 0, 1)], 0)
    res = solve_lap(d, [5])
    assert res.status == FULLY_BLOCKED
    assert len(res.trajectory) == 1
    assert res.trajectory[0].t_star == 5
    assert res.final_point.tolist() == [0]


def test_unblocked():
    d = DualProblem([-1], [Facet([1], 0, 1)], 0)
    res = solve_lap(d, [5])
    assert res.status == UNBLOCKED
    assert res.trajectory == []


def test_direction_vanished():
    d = DualProblem([1, 0], [Facet([1, 0], 0, 1), Facet([0, 1], 0, 2)], 0)
    res = solve_lap(d, [3, 3])
    assert res.status == DIRECTION_VANISHED
    assert res.final_point.tolist() == [0, 3]


def test_max_iterations(dual, start):
    res = solve_lap(dual, start, max_iters=1)
    assert res.status == MAX_ITERATIONS
    assert len(res.trajectory) == 1


def test_infeasible_start(dual):
    with pytest.raises(InfeasibleStartError):
        solve_lap(dual, [0, 0, 0, 0, 0])


def test_zero_goal(dual, start):
    with pytest.raises(ValueError):
        solve_lap(dual, start, [0] * 5)


def test_blockers_stay_tight(dual, start):
    res = solve_lap(dual, start)
    for st in res.trajectory:
        for j in st.sigma_after:
            assert dual.facet(j).slack(st.P) == 0
        assert is_dual_feasible(dual, st.P)


def test_sigma_grows(dual, start):
    res = solve_lap(dual, start)
    sizes = [len(st.sigma_after) for st in res.trajectory]
    assert sizes == sorted(sizes) and len(set(sizes)) == len(sizes)
    for a, b in zip(res.trajectory, res.trajectory[1:]):
        assert set(a.sigma_after) <= set(b.sigma_after)


def test_estimator(problem, start):
    est = LAPSolver()
    assert clone(est).get_params()["arithmetic"] == "rational"
    est.fit(problem, start)
    assert est.objective_ == 5
    assert est.point_.tolist() == P3
    assert est.n_iter_ == 3
    assert est.status_ == FULLY_BLOCKED


def test_estimator_float_and_custom_goal(problem, start):
    est = LAPSolver(arithmetic="float", goal=[-4, -1, -4, -6, -2]).fit(
        problem, start)
    assert est.objective_ == pytest.approx(5)


def test_estimator_rejects_bad_problem(start):
    with pytest.raises(TypeError):
        LAPSolver().fit("nope", start)
