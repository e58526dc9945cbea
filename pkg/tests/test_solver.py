import pytest

from eigenpoints.counts import expected_count
from eigenpoints.multipoly import Polynomial
from eigenpoints.points import ProjectivePoint
from eigenpoints.rationals import rational
from eigenpoints.solver import (
    EigenSolution,
    chart_system,
    curve_membership_check,
    eigenpoints,
    solve_zero_dimensional,
)
from eigenpoints.tensors import (
    EigenMatrix,
    degenerate_tensor,
    fermat_tensor,
    minor_ideal_generators,
)

from conftest import FERMAT_15, SEEDS, random_form, random_tensor


def test_chart_system_fermat():
    t = fermat_tensor(3, 3).to_partial()
    system = chart_system(t, 0)
    assert len(system) == 3
    for k, p in enumerate(system):
        # g_k - x_k g_0 at x_0 = 1 is 3(x_k^2 - x_k) in the chart variables
        var = Polynomial.variable(k, 3)
        assert p == (var * var - var) * rational(3)


def test_solve_unit_grid():
    x = Polynomial.variable(0, 2)
    y = Polynomial.variable(1, 2)
    result = solve_zero_dimensional([x * x - x, y * y - y])
    assert len(result.solutions) == 4
    got = {(str(a), str(b)) for (a, b), m in result.solutions}
    assert got == {("0", "0"), ("0", "1"), ("1", "0"), ("1", "1")}
    assert all(m == 1 for _, m in result.solutions)


def test_solve_multiplicity_two():
    x = Polynomial.variable(0, 2)
    y = Polynomial.variable(1, 2)
    result = solve_zero_dimensional([x * x, y])
    assert len(result.solutions) == 1
    (coords, mult) = result.solutions[0]
    assert mult == 2
    assert tuple(map(str, coords)) == ("0", "0")


def test_solve_three_vars_grid():
    vs = [Polynomial.variable(i, 3) for i in range(3)]
    result = solve_zero_dimensional([v * v - v for v in vs])
    assert len(result.solutions) == 8
    assert all(m == 1 for _, m in result.solutions)


def test_positive_dimensional_reported():
    x = Polynomial.variable(0, 2)
    result = solve_zero_dimensional([x, Polynomial.zero(2)])
    assert result.positive_dimensional


def test_fermat_golden_15(fermat_solution):
    sol = fermat_solution
    assert sol.certified
    assert sol.total_multiplicity == 15
    got = {tuple(str(c) for c in p.coords) for p, _ in sol.points}
    want = {tuple(str(c) for c in pt) for pt in FERMAT_15}
    assert got == want
    assert all(p.exact for p, _ in sol.points)


def test_fermat_chart_zero_contributes_eight(fermat_solution):
    in_chart = [p for p, _ in fermat_solution.points if p.coords[0] != 0]
    assert len(in_chart) == 8


def test_seeded_counts_small():
    for n, d in [(2, 3), (2, 4), (3, 3)]:
        t = random_tensor(n, d, seed=SEEDS[0])
        sol = eigenpoints(t, seed=0)
        assert sol.certified
        assert sol.total_multiplicity == expected_count(n, d)


def test_residuals_on_minors():
    t = random_tensor(3, 3, seed=SEEDS[1])
    sol = eigenpoints(t, seed=0)
    gens = minor_ideal_generators(EigenMatrix(t))
    for p, _ in sol.points:
        if p.exact:
            for g in gens:
                assert g.evaluate(list(p.coords)) == 0
        else:
            coords = list(p.as_complex())
            scale = max(abs(float(c)) for g in gens for c in g.terms.values())
            for g in gens:
                assert abs(complex(g.evaluate(coords))) <= 1e-8 * scale


def test_degenerate_tensor_flagged():
    h = random_form(4, 1, seed=1)
    t = degenerate_tensor(3, 3, h)
    sol = eigenpoints(t, seed=0)
    assert not sol.certified
    assert any("positive" in d for d in sol.diagnostics)


def test_scaling_invariance():
    t = random_tensor(3, 3, seed=SEEDS[2])
    sol1 = eigenpoints(t, seed=0)
    sol2 = eigenpoints(t.scale(rational(-7, 3)), seed=0)
    assert sol1.certified and sol2.certified
    assert sol1.point_set().same_set(sol2.point_set())


def test_shift_invariance_when_certified():
    from eigenpoints.tensors import degenerate_shift

    t = random_tensor(3, 3, seed=SEEDS[3])
    h = random_form(4, 1, seed=10)
    shifted = degenerate_shift(t, h)
    a = eigenpoints(t, seed=0)
    b = eigenpoints(shifted, seed=0)
    assert minor_ideal_generators(EigenMatrix(t)) == minor_ideal_generators(
        EigenMatrix(shifted)
    )
    if a.certified and b.certified:
        assert a.point_set().same_set(b.point_set())


def test_curve_membership_fermat(fermat_solution):
    t = fermat_tensor(3, 3).to_partial()
    report = curve_membership_check(t, 0, 1, fermat_solution)
    assert report["passes"]
    assert report["all_exact_zero"]


def test_joint_deleted_column_system_matches():
    # E(T) in the chart equals the joint zero set of the M_0 and M_1 minors
    t = random_tensor(3, 3, seed=SEEDS[4])
    sol = eigenpoints(t, seed=0)
    assert sol.certified
    joint = []
    for deleted in (0, 1):
        for g in minor_ideal_generators(EigenMatrix(t, (deleted,))):
            joint.append(g.dehomogenize(0))
    result = solve_zero_dimensional(joint[:3] + joint[3:])
    chart_points = {p.sort_key() for p, _ in sol.points if p.coords[0] != 0}
    got = set()
    for coords, _ in result.solutions:
        exact = all(not isinstance(c, complex) for c in coords)
        one = rational(1) if exact else 1.0 + 0j
        got.add(ProjectivePoint([one, *coords]).sort_key())
    assert got == chart_points


def test_solution_json_round_trip(fermat_solution):
    data = fermat_solution.to_json()
    back = EigenSolution.from_json(data)
    assert back.total_multiplicity == fermat_solution.total_multiplicity
    assert back.certified == fermat_solution.certified
    assert back.point_set().same_set(fermat_solution.point_set())


def test_real_only_filter():
    t = random_tensor(2, 3, seed=SEEDS[0])
    sol = eigenpoints(t, seed=0)
    real = sol.real_points()
    assert all(p.is_real() for p, _ in real)
    assert len(real) <= len(sol.points)


def test_large_n_guard():
    t = random_tensor(4, 2, seed=1)
    with pytest.raises(ValueError):
        eigenpoints(t, seed=0)


def test_order_two_classical_eigenvectors():
    # d = 2 is the matrix case: n+1 eigenpoints
    for n in (2, 3):
        t = random_tensor(n, 2, seed=5)
        sol = eigenpoints(t, seed=0)
        assert sol.certified
        assert sol.total_multiplicity == n + 1


def test_cone_tensor_reports_non_reduced():
    # a cubic cone in P^3: the vertex is a non-reduced eigenpoint and the
    # total drops below the generic length; reported, never repaired
    from eigenpoints.tensors import SymmetricTensor

    f = Polynomial.from_text("1 * x0^3 + 1 * x1^3 + 1 * x2^3", 4)
    sol = eigenpoints(SymmetricTensor(f), seed=0)
    assert not sol.certified
    vertex = ProjectivePoint([rational(0), rational(0), rational(0), rational(1)])
    fat = [(p, m) for p, m in sol.points if m > 1]
    assert fat and fat[0][0].same_point(vertex)
    assert any("generic length" in d or "non-reduced" in d for d in sol.diagnostics)
