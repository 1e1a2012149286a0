from fractions import Fraction

import pytest

from expodom.simplex import solve_max_leq, solve_min_geq

F = Fraction


def test_single_variable():
    res = solve_min_geq([[F(2)]], [F(1)], [F(1)])
    assert res.status == "optimal"
    assert res.objective == F(1, 2)
    assert res.x == [F(1, 2)]
    assert res.y == [F(1, 2)]  # dual: max y subject to 2y <= 1


def test_two_by_two():
    a = [[F(2), F(1)], [F(1), F(2)]]
    res = solve_min_geq(a, [F(1), F(1)], [F(1), F(1)])
    assert res.status == "optimal"
    assert res.objective == F(2, 3)
    assert res.x == [F(1, 3), F(1, 3)]
    # strong duality, exactly
    assert sum(res.y) == F(2, 3)


def test_degenerate_many_ties():
    # every row tight at the optimum; Bland must not cycle
    a = [
        [F(2), F(1), F(1)],
        [F(1), F(2), F(1)],
        [F(1), F(1), F(2)],
    ]
    res = solve_min_geq(a, [F(1)] * 3, [F(1)] * 3)
    assert res.status == "optimal"
    assert res.objective == F(3, 4)


def test_infeasible():
    res = solve_min_geq([[F(0)]], [F(1)], [F(1)])
    assert res.status == "infeasible"


def test_unbounded():
    res = solve_min_geq([[F(1)]], [F(1)], [F(-1)])
    assert res.status == "unbounded"


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        solve_min_geq([[F(1), F(2)]], [F(1)], [F(1)])


def test_negative_rhs_rejected():
    with pytest.raises(ValueError):
        solve_min_geq([[F(1)]], [F(-1)], [F(1)])


def test_duals_certify():
    # y is feasible for the dual and matches the primal objective
    a = [[F(2), F(1), F(0)], [F(1), F(2), F(1)], [F(0), F(1), F(2)]]
    b = [F(1), F(1), F(1)]
    c = [F(1), F(1), F(1)]
    res = solve_min_geq(a, b, c)
    assert res.status == "optimal"
    m, n = 3, 3
    for j in range(n):
        assert sum(a[i][j] * res.y[i] for i in range(m)) <= c[j]
    assert all(yi >= 0 for yi in res.y)
    assert sum(b[i] * res.y[i] for i in range(m)) == res.objective
    for i in range(m):
        assert sum(a[i][j] * res.x[j] for j in range(n)) >= b[i]


def test_max_leq_agrees_with_dual():
    a = [[F(2), F(1)], [F(1), F(2)]]
    b = [F(1), F(1)]
    c = [F(1), F(1)]
    primal = solve_min_geq(a, b, c)
    # dual: max b.y s.t. a^T y <= c
    at = [[a[i][j] for i in range(2)] for j in range(2)]
    dual = solve_max_leq(at, c, b)
    assert dual.status == "optimal"
    assert dual.objective == primal.objective


def test_random_lps_against_scipy():
    scipy_opt = pytest.importorskip("scipy.optimize")
    import random

    rng = random.Random(161803)
    for _ in range(40):
        m = rng.randint(1, 5)
        n = rng.randint(1, 5)
        a = [
            [F(rng.randint(-3, 6), rng.randint(1, 4)) for _ in range(n)]
            for _ in range(m)
        ]
        b = [F(rng.randint(0, 5), rng.randint(1, 3)) for _ in range(m)]
        c = [F(rng.randint(0, 5), rng.randint(1, 3)) for _ in range(n)]
        got = solve_min_geq(a, b, c)
        res = scipy_opt.linprog(
            c=[float(v) for v in c],
            A_ub=[[-float(v) for v in row] for row in a],
            b_ub=[-float(v) for v in b],
            bounds=[(0, None)] * n,
            method="highs",
        )
        if got.status == "optimal":
            assert res.status == 0
            assert abs(res.fun - float(got.objective)) < 1e-7
            # returned duals always certify the objective exactly
            assert sum(y * bi for y, bi in zip(got.y, b)) == got.objective
            for j in range(n):
                assert sum(a[i][j] * got.y[i] for i in range(m)) <= c[j]
        elif got.status == "infeasible":
            assert res.status == 2
        else:
            assert res.status == 3  # unbounded
