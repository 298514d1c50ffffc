"""Classical Jacobi, Laguerre and Charlier polynomials as exact :class:`Poly` values.

Jacobi polynomials come in three independently coded expansions
(``Def1``/``Def2``/``Def3``) so they can cross-check one another. Charlier
polynomials are read off their generating function
``exp(-a t) (1 + t)**x`` by multiplying the two power series in ``t``.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactnum import (
    PoleError, RationalLike, as_rational, binom_general, factorial, format_rational, pochhammer,
)
from .polyring import ONE, X, ZERO, Poly
from .report import IdentityReport

__all__ = [
    "JacobiParams", "LaguerreParams", "CharlierParams", "JacobiDef", "Family",
    "jacobi", "laguerre", "charlier", "falling_poly",
    "check_derivative_shift", "ode_residual", "limit_check_jacobi_to_laguerre",
    "LimitCertificate", "certify_limit",
]


class JacobiDef(enum.Enum):
    DEF1 = "Def1"
    DEF2 = "Def2"
    DEF3 = "Def3"


class Family(enum.Enum):
    JACOBI = "jacobi"
    LAGUERRE = "laguerre"


@dataclass(frozen=True)
class JacobiParams:
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "beta", as_rational(self.beta))

    def as_dict(self):
        return {"alpha": format_rational(self.alpha), "beta": format_rational(self.beta)}


@dataclass(frozen=True)
class LaguerreParams:
    alpha: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))

    def as_dict(self):
        return {"alpha": format_rational(self.alpha)}


@dataclass(frozen=True)
class CharlierParams:
    a: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))

    def as_dict(self):
        return {"a": format_rational(self.a)}


_HALF_XM1 = (X - 1) / 2


@lru_cache(maxsize=None)
def _powers(base: Poly, n: int) -> Poly:
    return base ** n


def _jacobi_def1(n: int, a: Fraction, b: Fraction) -> Poly:
    out = ZERO
    for k in range(n + 1):
        c = pochhammer(n + a + b + 1, k) / factorial(k) * pochhammer(a + k + 1, n - k) / factorial(n - k)
        if c:
            out = out + _powers(_HALF_XM1, k) * c
    return out


def _jacobi_def2(n: int, a: Fraction, b: Fraction) -> Poly:
    out = ZERO
    for k in range(n + 1):
        c = pochhammer(-n - k - a - b, k) / factorial(k) * pochhammer(-n - a, n - k) / factorial(n - k)
        if c:
            out = out + _powers(_HALF_XM1, k) * c
    return out if n % 2 == 0 else -out


def _jacobi_def3(n: int, a: Fraction, b: Fraction) -> Poly:
    out = ZERO
    for k in range(n + 1):
        c = binom_general(n + a, n - k) * binom_general(n + b, k)
        if c:
            out = out + _powers(X - 1, k) * _powers(X + 1, n - k) * c
    return out / 2 ** n


_JACOBI_IMPL = {JacobiDef.DEF1: _jacobi_def1, JacobiDef.DEF2: _jacobi_def2, JacobiDef.DEF3: _jacobi_def3}


@lru_cache(maxsize=4096)
def _jacobi_cached(n: int, a: Fraction, b: Fraction, variant: JacobiDef) -> Poly:
    return _JACOBI_IMPL[variant](n, a, b)


def jacobi(n: int, params: JacobiParams | tuple, variant: JacobiDef = JacobiDef.DEF1) -> Poly:
    """P_n^(alpha, beta)(x) for any rational alpha, beta.

    The degree can drop below n at degenerate parameters; P_n^(-n,-n) is
    the zero polynomial for n >= 1.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if not isinstance(params, JacobiParams):
        params = JacobiParams(*params)
    return _jacobi_cached(n, params.alpha, params.beta, JacobiDef(variant))


@lru_cache(maxsize=4096)
def _laguerre_cached(n: int, a: Fraction) -> Poly:
    return Poly([(-1) ** k * binom_general(n + a, n - k) / factorial(k) for k in range(n + 1)])


def laguerre(n: int, params: LaguerreParams | RationalLike) -> Poly:
    """L_n^(alpha)(x); the leading coefficient (-1)**n/n! never vanishes."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    alpha = params.alpha if isinstance(params, LaguerreParams) else as_rational(params)
    return _laguerre_cached(n, alpha)


@lru_cache(maxsize=None)
def falling_poly(m: int) -> Poly:
    """binom(x, m) = x(x-1)...(x-m+1)/m! expanded in x."""
    out = ONE
    for r in range(m):
        out = out * (X - r)
    return out / factorial(m)


@lru_cache(maxsize=4096)
def _charlier_cached(n: int, a: Fraction) -> Poly:
    # t^n coefficient of exp(-a t) * sum_m binom(x, m) t^m
    out = ZERO
    for m in range(n + 1):
        e = (-a) ** (n - m) / factorial(n - m)
        if e:
            out = out + falling_poly(m) * e
    return out


def charlier(n: int, params: CharlierParams | RationalLike) -> Poly:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    a = params.a if isinstance(params, CharlierParams) else as_rational(params)
    return _charlier_cached(n, a)


def _shift_sides(family: Family, n: int, i: int, params) -> tuple[Poly, Poly]:
    if family is Family.JACOBI:
        a, b = params.alpha, params.beta
        lhs = jacobi(n, params).derivative(i)
        rhs = jacobi(n - i, JacobiParams(a + i, b + i)) * (pochhammer(n + a + b + 1, i) / 2 ** i)
    else:
        a = params.alpha
        lhs = laguerre(n, a).derivative(i)
        rhs = laguerre(n - i, a + i) * (-1) ** i
    return lhs, rhs


def check_derivative_shift(family: Family | str, n: int, i: int, params) -> IdentityReport:
    """Compare D**i of the degree-n member with the scaled, parameter-shifted member."""
    family = Family(family)
    if not 0 <= i <= n:
        raise ValueError("need 0 <= i <= n")
    lhs, rhs = _shift_sides(family, n, i, params)
    return IdentityReport.from_pair(
        f"diff-shift-{family.value}", params.as_dict(), (i, n), (n, i), rhs, lhs)


def ode_residual(family: Family | str, y: Poly, n: int, params) -> Poly:
    """Left-hand side of the classical second-order equation applied to y."""
    family = Family(family)
    d1 = y.derivative(1)
    d2 = y.derivative(2)
    if family is Family.JACOBI:
        a, b = params.alpha, params.beta
        return (1 - X * X) * d2 + (b - a - (a + b + 2) * X) * d1 + y * (n * (n + a + b + 1))
    a = params.alpha
    return X * d2 + (a + 1 - X) * d1 + y * n


@dataclass
class LimitCertificate:
    """Scaled errors beta*e(beta) along a schedule, one row per sample point."""

    label: str
    params: dict
    schedule: list[Fraction]
    scaled_errors: dict[Fraction, list[Fraction]] = field(default_factory=dict)
    tolerance: Fraction = Fraction(0)

    @property
    def passed(self) -> bool:
        return all(_envelope_ok(row, self.tolerance) for row in self.scaled_errors.values())

    def as_dict(self):
        return {
            "label": self.label,
            "params": self.params,
            "schedule": [format_rational(b) for b in self.schedule],
            "scaled_errors": {format_rational(x0): [format_rational(s) for s in row]
                              for x0, row in self.scaled_errors.items()},
            "passed": self.passed,
        }


def _envelope_ok(row: Sequence[Fraction], tolerance: Fraction) -> bool:
    """Running-max envelope of the scaled errors must grow by non-increasing steps.

    The first entry is a warm-up and is left out. A bounded beta*e(beta)
    settles, so its envelope flattens out; slower decay (e ~ beta**-1/2, say)
    makes the steps grow along a geometric schedule and fails.
    """
    env = list(itertools.accumulate(row[1:], max))
    steps = [e1 - e0 for e0, e1 in zip(env, env[1:])]
    return all(s1 <= s0 * (1 + tolerance) for s0, s1 in zip(steps, steps[1:]))


def certify_limit(label, params, schedule, samples, error_at, tolerance=0) -> LimitCertificate:
    """Tabulate beta*e(beta) with ``error_at(beta, x0)`` returning the exact e(beta)."""
    schedule = [as_rational(b) for b in schedule]
    if any(b <= 0 for b in schedule) or any(b1 >= b2 for b1, b2 in zip(schedule, schedule[1:])):
        raise ValueError("beta schedule must be positive and strictly increasing")
    cert = LimitCertificate(label, params, schedule, tolerance=as_rational(tolerance))
    for x0 in samples:
        x0 = as_rational(x0)
        cert.scaled_errors[x0] = [abs(error_at(b, x0)) * b for b in schedule]
    return cert


def limit_check_jacobi_to_laguerre(n: int, alpha: RationalLike, samples: Sequence[RationalLike],
                                   beta_schedule: Sequence[RationalLike], tolerance=0) -> LimitCertificate:
    """Exact O(1/beta) certificate for P_n^(alpha,beta)(1 - 2x/beta) -> L_n^(alpha)(x)."""
    alpha = as_rational(alpha)
    lag = laguerre(n, alpha)

    def err(beta, x0):
        return jacobi(n, JacobiParams(alpha, beta))(1 - 2 * x0 / beta) - lag(x0)

    return certify_limit("limit", {"n": n, "alpha": format_rational(alpha)},
                         beta_schedule, samples, err, tolerance)
