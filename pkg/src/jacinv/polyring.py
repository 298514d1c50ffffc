"""Dense univariate polynomials over the rationals, in the variable x.

A :class:`Poly` stores integer numerators over one positive denominator,
kept primitive (gcd of all numerators and the denominator is 1) and without
trailing zeros. That makes equality structural and keeps the inner loops in
integer arithmetic; see :mod:`jacinv.kernels`.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels
from .exactnum import RationalLike, as_rational, format_rational, parse_rational

__all__ = ["Poly", "X", "ONE", "ZERO", "parse_poly", "format_poly"]


def _canon(nums: list[int], den: int) -> tuple[tuple[int, ...], int]:
    n = len(nums)
    while n and nums[n - 1] == 0:
        n -= 1
    if n == 0:
        return (), 1
    nums = nums[:n]
    if den < 0:
        nums = [-c for c in nums]
        den = -den
    g = math.gcd(den, *nums)
    if g != 1:
        nums = [c // g for c in nums]
        den //= g
    return tuple(nums), den


class Poly:
    """Immutable polynomial with exact rational coefficients.

    >>> p = Poly([-1, 0, 3]) / 2
    >>> str(p)
    '3/2*x^2 - 1/2'
    >>> p(Fraction(1, 2))
    Fraction(-1, 8)
    """

    __slots__ = ("_nums", "_den", "_hash")

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        fr = [as_rational(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [c.numerator * (den // c.denominator) for c in fr]
        self._nums, self._den = _canon(nums, den)
        self._hash = None

    @classmethod
    def _raw(cls, nums: list[int], den: int) -> "Poly":
        p = cls.__new__(cls)
        p._nums, p._den = _canon(nums, den)
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: RationalLike) -> "Poly":
        c = as_rational(c)
        return cls._raw([c.numerator], c.denominator)

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> "Poly":
        c = as_rational(c)
        return cls._raw([0] * k + [c.numerator], c.denominator)

    # -- inspection ---------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients, index i holding the coefficient of x**i."""
        return tuple(Fraction(c, self._den) for c in self._nums)

    @property
    def degree(self) -> float | int:
        """Degree; the zero polynomial has degree ``-math.inf``."""
        return len(self._nums) - 1 if self._nums else -math.inf

    def is_zero(self) -> bool:
        return not self._nums

    def is_constant(self) -> bool:
        return len(self._nums) <= 1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._nums):
            return Fraction(self._nums[k], self._den)
        return Fraction(0)

    def constant_value(self) -> Fraction:
        if len(self._nums) > 1:
            raise ValueError("polynomial is not constant")
        return self.coeff(0)

    # -- ring operations ----------------------------------------------------
    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly.constant(as_rational(other))

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return _linear(self, other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return _linear(self, other, -1)

    def __rsub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return _linear(other, self, -1)

    def __neg__(self):
        return Poly._raw([-c for c in self._nums], self._den)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return Poly._raw(kernels.convolve(list(self._nums), list(other._nums)),
                             self._den * other._den)
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        return Poly._raw([x * c.numerator for x in self._nums], self._den * c.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            return NotImplemented
        c = as_rational(other)
        if c == 0:
            raise ZeroDivisionError("polynomial division by zero")
        return Poly._raw([x * c.denominator for x in self._nums], self._den * c.numerator)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self._nums == other._nums and self._den == other._den
        try:
            other = Poly.constant(as_rational(other))
        except TypeError:
            return NotImplemented
        return self == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._nums, self._den))
        return self._hash

    # -- calculus and evaluation --------------------------------------------
    def derivative(self, i: int = 1) -> "Poly":
        """D**i applied to this polynomial."""
        if i < 0:
            raise ValueError("derivative order must be nonnegative")
        if i == 0:
            return self
        return Poly._raw(kernels.derive(list(self._nums), i), self._den)

    def __call__(self, x0: RationalLike) -> Fraction:
        return self.evaluate(x0)

    def evaluate(self, x0: RationalLike) -> Fraction:
        if not self._nums:
            return Fraction(0)
        x0 = as_rational(x0)
        d = len(self._nums) - 1
        top = kernels.horner(list(self._nums), x0.numerator, x0.denominator)
        return Fraction(top, self._den * x0.denominator ** d)

    def compose_affine(self, a: RationalLike, b: RationalLike) -> "Poly":
        """Expand p(a*x + b)."""
        if not self._nums:
            return self
        a = as_rational(a)
        b = as_rational(b)
        r = a.denominator * b.denominator
        u = a.numerator * b.denominator
        v = b.numerator * a.denominator
        d = len(self._nums) - 1
        return Poly._raw(kernels.affine_horner(list(self._nums), u, v, r), self._den * r ** d)

    def is_even(self) -> bool:
        return all(c == 0 for c in self._nums[1::2])

    def is_odd(self) -> bool:
        return all(c == 0 for c in self._nums[0::2])

    # -- text ---------------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def _linear(p: Poly, q: Poly, sign: int) -> Poly:
    dp, dq = p._den, q._den
    g = math.gcd(dp, dq)
    fp, fq = dq // g, dp // g
    n = max(len(p._nums), len(q._nums))
    out = [0] * n
    for i, c in enumerate(p._nums):
        out[i] = c * fp
    for i, c in enumerate(q._nums):
        out[i] += sign * c * fq
    return Poly._raw(out, dp * fp)


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def format_poly(p: Poly) -> str:
    """Render as ``"3/2*x^2 - 1/2"``: descending powers, unit coefficients dropped."""
    cs = p.coeffs
    if not cs:
        return "0"
    parts: list[str] = []
    for k in range(len(cs) - 1, -1, -1):
        c = cs[k]
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            var = "x" if k == 1 else f"x^{k}"
            body = var if mag == 1 else f"{format_rational(mag)}*{var}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


_TERM_RE = re.compile(
    r"(?P<coef>\d+(?:/\d+)?)?(?:(?(coef)\*)x(?:\^(?P<exp>\d+))?)?"
)


def parse_poly(text: str) -> Poly:
    """Inverse of :func:`format_poly`.

    Accepts ``c*x^k`` terms with an optional leading sign and ``" + "`` /
    ``" - "`` separators; a bare ``x^k`` means coefficient 1.
    """
    s = text.strip()
    if s == "0":
        return ZERO
    if not s:
        raise ValueError("empty polynomial text")
    sign = 1
    if s[0] == "-":
        sign, s = -1, s[1:]
    chunks = re.split(r" ([+-]) ", s)
    signs = [sign] + [1 if op == "+" else -1 for op in chunks[1::2]]
    coeffs: dict[int, Fraction] = {}
    for sg, term in zip(signs, chunks[0::2]):
        m = _TERM_RE.fullmatch(term)
        if m is None or not term:
            raise ValueError(f"bad polynomial term {term!r} in {text!r}")
        has_x = "x" in term
        c = parse_rational(m.group("coef")) if m.group("coef") else Fraction(1)
        if not has_x and not m.group("coef"):
            raise ValueError(f"bad polynomial term {term!r}")
        k = int(m.group("exp")) if m.group("exp") else (1 if has_x else 0)
        if k in coeffs:
            raise ValueError(f"repeated power x^{k} in {text!r}")
        coeffs[k] = sg * c
    top = max(coeffs)
    return Poly([coeffs.get(k, 0) for k in range(top + 1)])

