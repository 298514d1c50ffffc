"""Exact rational scalars and the shifted-factorial primitives.

Scalars are :class:`fractions.Fraction`; it already keeps the canonical
reduced form with a positive denominator. No Gamma function is ever
evaluated: every Gamma ratio is folded into a Pochhammer product.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

__all__ = [
    "Rational", "RationalLike", "PoleError", "ContinuityCaseError", "as_rational",
    "parse_rational", "format_rational", "pochhammer", "binom_general",
    "gamma_ratio", "factorial",
]

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


class PoleError(ArithmeticError):
    """A Pochhammer denominator vanished at this parameter point."""


class ContinuityCaseError(PoleError):
    """Parameter point the classical formulas only reach by continuity (e.g. a+b+1 = 0)."""


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; q must be a positive integer.

    >>> parse_rational("-3/2")
    Fraction(-3, 2)
    """
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(r: Fraction) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def pochhammer(a: RationalLike, n: int) -> Fraction:
    """Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1."""
    if n < 0:
        raise ValueError("pochhammer order must be nonnegative")
    a = as_rational(a)
    out = Fraction(1)
    for m in range(n):
        out *= a + m
    return out


def factorial(n: int) -> int:
    out = 1
    for m in range(2, n + 1):
        out *= m
    return out


def binom_general(a: RationalLike, k: int) -> Fraction:
    """a(a-1)...(a-k+1)/k! for rational a.

    Negative k gives 0, which is how binomials such as C(n+a, n-1) vanish
    at n = 0 in the generalized-family coefficients.
    """
    if k < 0:
        return Fraction(0)
    a = as_rational(a)
    out = Fraction(1)
    for m in range(k):
        out *= a - m
    return out / factorial(k)


def gamma_ratio(a: RationalLike, n: int) -> Fraction:
    """Gamma(a+n)/Gamma(a) as an exact rational.

    For n < 0 this is 1/(a+n)_{-n}; a vanishing product means the ratio
    hits a pole and :class:`PoleError` is raised.
    """
    a = as_rational(a)
    if n >= 0:
        return pochhammer(a, n)
    den = pochhammer(a + n, -n)
    if den == 0:
        raise PoleError(f"Gamma({format_rational(a + n)}) pole in Gamma(a+n)/Gamma(a), a={format_rational(a)}, n={n}")
    return 1 / den
