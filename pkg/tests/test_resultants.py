import pytest

from eigenpoints import resultants as RS
from eigenpoints import unipoly
from eigenpoints.multipoly import Polynomial
from eigenpoints.rationals import rational


def test_eliminate_grid():
    x = Polynomial.variable(0, 2)
    y = Polynomial.variable(1, 2)
    p1 = x * x - x
    yy = y - x * rational(2)
    p2 = yy * yy - yy
    res = RS.eliminate_y(p2, p1)  # order should not matter for the variety
    # p1 does not involve y after the roles flip; exercise both branches
    res2 = RS.eliminate_y(p1, p2)
    assert unipoly.deg(res2.eliminant) >= 2


def test_multiplicity_example():
    # {x^2, y}: the eliminant is x^2, giving (0,0) with multiplicity two
    x = Polynomial.variable(0, 2)
    y = Polynomial.variable(1, 2)
    res = RS.eliminate_y(x * x, y)
    assert res.eliminant == [rational(0), rational(0), rational(1)]


def test_resultant_vs_sympy():
    import random

    try:
        import sympy
    except ImportError:
        pytest.skip("sympy not available")
    rng = random.Random(1)
    xs, ys = sympy.symbols("x y")
    for trial in range(5):
        terms1 = {}
        terms2 = {}
        for _ in range(6):
            terms1[(rng.randint(0, 2), rng.randint(0, 2))] = rational(rng.randint(-4, 4))
            terms2[(rng.randint(0, 2), rng.randint(0, 2))] = rational(rng.randint(-4, 4))
        p1 = Polynomial(2, terms1)
        p2 = Polynomial(2, terms2)
        if p1.is_zero() or p2.is_zero():
            continue
        b1 = RS.to_bivar(p1)
        b2 = RS.to_bivar(p2)
        if RS._bv_deg(b1) < 1 or RS._bv_deg(b2) < 1:
            continue

        def to_sympy(p):
            e = 0
            for (ex, ey), c in p.terms.items():
                e += sympy.Rational(int(c.numerator), int(c.denominator)) * xs**ex * ys**ey
            return e

        try:
            mine = RS.eliminate_y(p1, p2).eliminant
        except RS.EliminationDegenerate:
            continue
        theirs = sympy.Poly(sympy.resultant(to_sympy(p1), to_sympy(p2), ys), xs)
        if theirs.is_zero:
            continue
        # equal up to a rational scalar
        mine_monic = unipoly.monic(mine)
        coeffs = list(reversed([sympy.Rational(c) for c in theirs.all_coeffs()]))
        theirs_norm = [c / coeffs[-1] for c in coeffs]
        assert len(mine_monic) == len(theirs_norm)
        for a, b in zip(mine_monic, theirs_norm):
            assert sympy.Rational(int(a.numerator), int(a.denominator)) == b


def test_common_component_detected():
    x = Polynomial.variable(0, 2)
    y = Polynomial.variable(1, 2)
    common = x + y
    with pytest.raises(RS.EliminationDegenerate):
        RS.eliminate_y(common * x, common * y)


def test_vertical_line_component_detected():
    x = Polynomial.variable(0, 2)
    y = Polynomial.variable(1, 2)
    one = Polynomial.constant(2, rational(1))
    with pytest.raises(RS.EliminationDegenerate):
        RS.eliminate_y((x - one) * y, (x - one) * (y * y - one))
