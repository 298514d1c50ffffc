from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import assume, given
from hypothesis import strategies as st

from jacinv.exactnum import (
    PoleError, as_rational, binom_general, format_rational, gamma_ratio, parse_rational, pochhammer,
)

from .conftest import small_rationals


@pytest.mark.parametrize("a, n, expected", [
    (Fraction(7, 3), 0, 1),
    (Fraction(1, 2), 3, Fraction(15, 8)),
    (-2, 3, 0),
])
def test_pochhammer_examples(a, n, expected):
    assert pochhammer(a, n) == expected


@pytest.mark.parametrize("a, k, expected", [
    (Fraction(-5, 4), 0, 1),
    (5, 2, 10),
    (Fraction(-1, 2), 2, Fraction(3, 8)),
    (3, -1, 0),
])
def test_binom_general_examples(a, k, expected):
    assert binom_general(a, k) == expected


def test_gamma_ratio_examples():
    assert gamma_ratio(Fraction(2, 5), 0) == 1
    assert gamma_ratio(Fraction(1, 3), 2) == Fraction(4, 9)
    assert gamma_ratio(Fraction(5, 2), -2) == 1 / (Fraction(1, 2) * Fraction(3, 2))
    with pytest.raises(PoleError):
        gamma_ratio(1, -1)


@given(small_rationals, st.integers(0, 12))
def test_pochhammer_matches_sympy(a, n):
    assert pochhammer(a, n) == Fraction(str(sympy.rf(sympy.Rational(a.numerator, a.denominator), n)))


@given(small_rationals, st.integers(0, 50), st.integers(0, 50))
def test_pochhammer_splits(a, m, n):
    assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)


@given(small_rationals, st.integers(0, 30))
def test_half_shift_identity(b, k):
    assume(b != 0)
    assert pochhammer(b / 2, k) * (b + 2 * k) == b * pochhammer(b / 2 + 1, k)


@given(st.integers(0, 40), st.integers(0, 40))
def test_binom_general_integer_case(n, k):
    assume(k <= n)
    assert binom_general(n, k) == comb(n, k)


@given(small_rationals, st.integers(-6, 6), st.integers(-6, 6))
def test_gamma_ratio_composes(a, n, m):
    try:
        lhs = gamma_ratio(a, n) * gamma_ratio(a + n, m)
        rhs = gamma_ratio(a, n + m)
    except PoleError:
        return
    assert lhs == rhs


@pytest.mark.parametrize("text, value", [("-3/2", Fraction(-3, 2)), ("7", Fraction(7)), ("+4/6", Fraction(2, 3))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["1/0", "1.5", "x", "3/-2", ""])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


@given(small_rationals)
def test_rational_text_roundtrip(r):
    assert parse_rational(format_rational(r)) == r


def test_format_rational():
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(Fraction(14, 2)) == "7"


def test_as_rational_rejects_float():
    with pytest.raises(TypeError):
        as_rational(0.5)
