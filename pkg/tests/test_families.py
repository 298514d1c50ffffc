import random
from fractions import Fraction

import pytest
import sympy

from jacinv.exactnum import binom_general, factorial, pochhammer
from jacinv.families import (
    Family, JacobiDef, JacobiParams, LaguerreParams, charlier, check_derivative_shift, jacobi, laguerre,
    limit_check_jacobi_to_laguerre, ode_residual,
)
from jacinv.polyring import ONE, X, ZERO, Poly

xs = sympy.Symbol("x")
rng = random.Random(20240611)
GRID = [(Fraction(rng.randint(-9, 9), rng.randint(1, 9)), Fraction(rng.randint(-9, 9), rng.randint(1, 9)))
        for _ in range(20)]


def from_sympy(expr) -> Poly:
    coeffs = sympy.Poly(sympy.expand(expr), xs).all_coeffs()[::-1]
    return Poly([Fraction(str(c)) for c in coeffs])


def S(r: Fraction):
    return sympy.Rational(r.numerator, r.denominator)


# -- sympy oracles -------------------------------------------------------------

@pytest.mark.parametrize("n", [0, 1, 2, 5, 9])
@pytest.mark.parametrize("ab", GRID[:6])
def test_jacobi_matches_sympy(n, ab):
    a, b = ab
    assert jacobi(n, JacobiParams(a, b)) == from_sympy(sympy.jacobi(n, S(a), S(b), xs))


@pytest.mark.parametrize("n", [0, 1, 3, 7])
@pytest.mark.parametrize("a", [Fraction(0), Fraction(1, 3), Fraction(-7, 2)])
def test_laguerre_matches_sympy(n, a):
    assert laguerre(n, a) == from_sympy(sympy.assoc_laguerre(n, S(a), xs))


@pytest.mark.parametrize("n", [0, 1, 2, 4, 6])
@pytest.mark.parametrize("a", [Fraction(1, 2), Fraction(-3), Fraction(5, 7)])
def test_charlier_matches_generating_function(n, a):
    # series expansion of exp(-a t) (1+t)^x in t, done by sympy
    t = sympy.Symbol("t")
    series = sympy.series(sympy.exp(-S(a) * t) * (1 + t) ** xs, t, 0, n + 1).removeO()
    assert charlier(n, a) == from_sympy(series.coeff(t, n))


# -- spec examples -------------------------------------------------------------

def test_jacobi_examples():
    a, b = Fraction(2, 3), Fraction(-5, 4)
    assert jacobi(0, JacobiParams(a, b)) == ONE
    assert jacobi(1, JacobiParams(a, b)) == (a + b + 2) / 2 * X + (a - b) / 2
    assert jacobi(2, JacobiParams(0, 0)) == (3 * X ** 2 - 1) / 2


def test_laguerre_examples():
    a = Fraction(3, 5)
    assert laguerre(0, a) == ONE
    assert laguerre(1, a) == (a + 1) - X
    assert laguerre(3, -3) == -X ** 3 / 6


def test_charlier_examples():
    a = Fraction(-4, 3)
    assert charlier(0, a) == ONE
    assert charlier(1, a) == X - a
    assert charlier(2, a) == X * (X - 1) / 2 - a * X + a ** 2 / 2


# -- invariants ----------------------------------------------------------------

@pytest.mark.parametrize("ab", GRID)
def test_three_definitions_agree(ab):
    p = JacobiParams(*ab)
    for n in range(16):
        ref = jacobi(n, p, JacobiDef.DEF1)
        assert jacobi(n, p, JacobiDef.DEF2) == ref
        assert jacobi(n, p, JacobiDef.DEF3) == ref


@pytest.mark.parametrize("ab", GRID[:5])
def test_ode_residuals_vanish(ab):
    jp, lp = JacobiParams(*ab), LaguerreParams(ab[0])
    for n in range(16):
        assert ode_residual(Family.JACOBI, jacobi(n, jp), n, jp) == ZERO
        assert ode_residual(Family.LAGUERRE, laguerre(n, lp), n, lp) == ZERO


def test_ode_residual_examples():
    assert ode_residual("laguerre", ONE, 0, LaguerreParams(Fraction(1, 2))) == ZERO
    assert ode_residual("jacobi", X, 0, JacobiParams(0, 0)) == -2 * X
    # a wrong degree leaves a nonzero residual
    assert ode_residual("jacobi", jacobi(3, JacobiParams(1, 2)), 2, JacobiParams(1, 2)) != ZERO


@pytest.mark.parametrize("n", range(0, 10))
def test_monomial_specializations(n):
    assert laguerre(n, -n) == (-1) ** n * X ** n / factorial(n)
    b = Fraction(2, 7)
    assert jacobi(n, JacobiParams(-n, b)) == binom_general(n + b, n) * ((X - 1) / 2) ** n
    if n >= 1:
        assert jacobi(n, JacobiParams(-n, -n)) == ZERO


@pytest.mark.parametrize("ab", GRID[:6])
def test_endpoint_value(ab):
    a, b = ab
    for n in range(8):
        for k in range(n + 1):
            val = jacobi(n - k, JacobiParams(-n - a - 1, -n - b - 1))(1)
            assert val == Fraction((-1) ** n, factorial(n)) * pochhammer(-n, k) * pochhammer(a + k + 1, n - k)


def test_derivative_shift_examples():
    assert check_derivative_shift("jacobi", 4, 0, JacobiParams(Fraction(1, 5), 3)).passed
    assert check_derivative_shift("laguerre", 4, 2, LaguerreParams(Fraction(1, 3))).passed
    p = JacobiParams(Fraction(1, 2), Fraction(-1, 4))
    rep = check_derivative_shift("jacobi", 5, 5, p)
    assert rep.passed
    assert jacobi(5, p).derivative(5) == Poly.constant(pochhammer(p.alpha + p.beta + 6, 5) / 2 ** 5)


@pytest.mark.parametrize("ab", GRID[:4])
def test_derivative_shift_sweep(ab):
    for n in range(9):
        for i in range(n + 1):
            assert check_derivative_shift(Family.JACOBI, n, i, JacobiParams(*ab)).passed
            assert check_derivative_shift(Family.LAGUERRE, n, i, LaguerreParams(ab[0])).passed


def test_limit_certificate_examples():
    cert = limit_check_jacobi_to_laguerre(0, Fraction(3, 4), [Fraction(1, 2), 1, 2], [10, 100, 1000])
    assert all(s == 0 for row in cert.scaled_errors.values() for s in row)
    cert = limit_check_jacobi_to_laguerre(1, 0, [1], [10, 100, 1000])
    # P_1^(0,b)(1 - 2/b) = -2/b and L_1^(0)(1) = 0, so b*e(b) = 2 exactly
    assert cert.scaled_errors[Fraction(1)] == [2, 2, 2]
    assert cert.passed
    assert limit_check_jacobi_to_laguerre(2, Fraction(1, 2), [2], [16, 256, 4096]).passed


def test_limit_schedule_validation():
    with pytest.raises(ValueError):
        limit_check_jacobi_to_laguerre(1, 0, [1], [100, 10])
    with pytest.raises(ValueError):
        limit_check_jacobi_to_laguerre(1, 0, [1], [-1, 10])
