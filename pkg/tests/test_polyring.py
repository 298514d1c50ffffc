from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from jacinv.polyring import ONE, X, ZERO, Poly, parse_poly

from .conftest import small_rationals

polys = st.lists(small_rationals, max_size=13).map(Poly)


def test_ring_examples(backend):
    assert (X + 1) * (X - 1) == X ** 2 - 1
    assert Poly([3, 0, 1]) + ZERO == Poly([3, 0, 1])
    assert Fraction(1, 2) * (2 * X) == X


def test_canonical_form():
    p = Poly([Fraction(2, 4), 0, 0])
    assert p.coeffs == (Fraction(1, 2),)
    assert ZERO.degree == float("-inf")
    assert Poly([0, 0]) == ZERO
    assert hash(Poly([1, 2])) == hash(Poly([Fraction(2, 2), 2]))


def test_derivative_examples(backend):
    assert (X ** 2).derivative() == 2 * X
    p = Poly([1, 2, 3])
    assert p.derivative(0) == p
    assert (X ** 3 - X).derivative(2) == 6 * X
    assert p.derivative(5) == ZERO


def test_evaluate_examples(backend):
    assert (X ** 2 - 1)(1) == 0
    assert ZERO(Fraction(3, 7)) == 0
    assert ((3 * X ** 2 - 1) / 2)(Fraction(1, 2)) == Fraction(-1, 8)


def test_compose_affine_examples(backend):
    assert X.compose_affine(-1, 0) == -X
    assert (X ** 2).compose_affine(1, 1) == X ** 2 + 2 * X + 1
    p = Poly([1, -2, 5])
    assert p.compose_affine(1, 0) == p


@given(polys, polys)
def test_degree_of_product(p, q):
    assume(not p.is_zero() and not q.is_zero())
    assert (p * q).degree == p.degree + q.degree


@given(polys, polys)
def test_leibniz(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@given(polys, small_rationals, small_rationals)
def test_compose_affine_inverts(p, a, b):
    assume(a != 0)
    assert p.compose_affine(a, b).compose_affine(1 / a, -b / a) == p


@given(polys)
def test_evaluate_at_one_is_coefficient_sum(p):
    assert p(1) == sum(p.coeffs, Fraction(0))


@given(polys, small_rationals, small_rationals)
def test_compose_affine_agrees_with_evaluation(p, a, b):
    # evaluation oracle: p(a*t + b) at a few t
    q = p.compose_affine(a, b)
    for t in (Fraction(0), Fraction(1, 3), Fraction(-2)):
        assert q(t) == p(a * t + b)


@given(polys)
def test_text_roundtrip(p):
    assert parse_poly(str(p)) == p


@pytest.mark.parametrize("text", ["3/2*x^2 - 1/2", "-x^3 + x", "7", "0", "-1/6*x^3", "x^2 + 2*x + 1"])
def test_parse_format_fixed_points(text):
    assert str(parse_poly(text)) == text


@pytest.mark.parametrize("bad", ["", "3x", "x^", "1 +", "x + x", "2**x"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_poly(bad)


def test_power_and_division():
    assert (X + 1) ** 0 == ONE
    assert (X + 1) ** 3 == X ** 3 + 3 * X ** 2 + 3 * X + 1
    with pytest.raises(ZeroDivisionError):
        X / 0
