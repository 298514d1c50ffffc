"""Generalized Jacobi, Sobolev-type Laguerre and symmetric ultraspherical polynomials.

Each family is a short combination of a classical polynomial and its
derivatives. The inner products are exact: moments of the normalized
continuous weights are rational, and the point masses add evaluations.

Jacobi moment of x^k under the normalized weight on [-1, 1]: substitute
x = 1 - 2t to get a Beta(a+1, b+1) law for t, so
E[x^k] = sum_j C(k, j) (-2)^j (a+1)_j / (a+b+2)_j.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactnum import (
    ContinuityCaseError, RationalLike, as_rational, binom_general, format_rational, pochhammer,
)
from .families import JacobiParams, certify_limit, jacobi, laguerre
from .polyring import X, Poly

__all__ = [
    "GeneralizedJacobiParams", "SobolevLaguerreParams",
    "gen_jacobi_coefficients", "gen_jacobi", "sobolev_laguerre_coefficients", "sobolev_laguerre",
    "ultraspherical_coefficients", "sym_ultraspherical",
    "jacobi_moment", "inner_product", "sobolev_inner_product", "limit_check_generalized",
]


@dataclass(frozen=True)
class GeneralizedJacobiParams:
    """a, b > -1 and masses M at x = -1, N at x = +1."""

    alpha: Fraction
    beta: Fraction
    M: Fraction = Fraction(0)
    N: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("alpha", "beta", "M", "N"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.alpha <= -1 or self.beta <= -1:
            raise ValueError("need alpha > -1 and beta > -1")
        if self.M < 0 or self.N < 0:
            raise ValueError("point masses must be nonnegative")
        if self.alpha + self.beta + 1 == 0:
            raise ContinuityCaseError("alpha + beta + 1 = 0 is only defined by continuity")

    def as_dict(self):
        return {k: format_rational(getattr(self, k)) for k in ("alpha", "beta", "M", "N")}


@dataclass(frozen=True)
class SobolevLaguerreParams:
    """a > -1, mass M on f(0)g(0) and N on f'(0)g'(0)."""

    alpha: Fraction
    M: Fraction = Fraction(0)
    N: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("alpha", "M", "N"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.alpha <= -1:
            raise ValueError("need alpha > -1")
        if self.M < 0 or self.N < 0:
            raise ValueError("M and N must be nonnegative")

    def as_dict(self):
        return {k: format_rational(getattr(self, k)) for k in ("alpha", "M", "N")}


def gen_jacobi_coefficients(n: int, params: GeneralizedJacobiParams) -> tuple[Fraction, Fraction, Fraction]:
    a, b, M, N = params.alpha, params.beta, params.M, params.N
    B = binom_general
    A0 = (1
          + M * B(n + b, n - 1) * B(n + a + b + 1, n) / B(n + a, n)
          + N * B(n + a, n - 1) * B(n + a + b + 1, n) / B(n + b, n)
          + M * N * (a + b + 2) ** 2 / ((a + 1) * (b + 1)) * B(n + a + b + 1, n - 1) ** 2)
    A1 = (M / (a + b + 1) * B(n + b, n) * B(n + a + b, n) / B(n + a, n)
          + M * N / (a + 1) * B(n + a + b, n - 1) * B(n + a + b + 1, n))
    A2 = (N / (a + b + 1) * B(n + a, n) * B(n + a + b, n) / B(n + b, n)
          + M * N / (b + 1) * B(n + a + b, n - 1) * B(n + a + b + 1, n))
    return A0, A1, A2


@lru_cache(maxsize=1024)
def gen_jacobi(n: int, params: GeneralizedJacobiParams) -> Poly:
    """A0 P_n + [A1 (1-x) - A2 (1+x)] D P_n with the classical P_n^(a,b)."""
    A0, A1, A2 = gen_jacobi_coefficients(n, params)
    p = jacobi(n, JacobiParams(params.alpha, params.beta))
    return p * A0 + (A1 * (1 - X) - A2 * (1 + X)) * p.derivative()


def sobolev_laguerre_coefficients(n: int, params: SobolevLaguerreParams) -> tuple[Fraction, Fraction, Fraction]:
    a, M, N = params.alpha, params.M, params.N
    B = binom_general
    A0 = (1 + M * B(n + a, n - 1)
          + (n * (a + 2) - (a + 1)) / ((a + 1) * (a + 3)) * N * B(n + a, n - 2)
          + M * N / ((a + 1) * (a + 2)) * B(n + a, n - 1) * B(n + a + 1, n - 2))
    A1 = (M * B(n + a, n)
          + Fraction(n - 1) / (a + 1) * N * B(n + a, n - 1)
          + 2 * M * N / (a + 1) ** 2 * B(n + a, n) * B(n + a + 1, n - 2))
    A2 = (N / (a + 1) * B(n + a, n - 1)
          + M * N / (a + 1) ** 2 * B(n + a, n) * B(n + a + 1, n - 1))
    return A0, A1, A2


@lru_cache(maxsize=1024)
def sobolev_laguerre(n: int, params: SobolevLaguerreParams) -> Poly:
    """A0 L_n + A1 D L_n + A2 D^2 L_n; N = 0 gives the generalized Laguerre polynomial."""
    A0, A1, A2 = sobolev_laguerre_coefficients(n, params)
    p = laguerre(n, params.alpha)
    return p * A0 + p.derivative(1) * A1 + p.derivative(2) * A2


def ultraspherical_coefficients(n: int, alpha: RationalLike, M: RationalLike) -> tuple[Fraction, Fraction]:
    """(C0, C1) in expanded form, before any factorization."""
    a, M = as_rational(alpha), as_rational(M)
    if 2 * a + 1 == 0:
        raise ContinuityCaseError("2*alpha + 1 = 0 is only defined by continuity")
    B = binom_general
    C0 = 1 + 2 * M * n / (a + 1) * B(n + 2 * a + 1, n) + 4 * M ** 2 * B(n + 2 * a + 1, n - 1) ** 2
    C1 = 2 * M / (2 * a + 1) * B(n + 2 * a, n) + 2 * M ** 2 / (a + 1) * B(n + 2 * a, n - 1) * B(n + 2 * a + 1, n)
    return C0, C1


def sym_ultraspherical(n: int, alpha: RationalLike, M: RationalLike, variant: str = "P") -> Poly:
    """C0 P_n^(a,a) - C1 x D P_n^(a,a), or the Q variant with the squared factor removed."""
    a, M = as_rational(alpha), as_rational(M)
    if a <= -1 or M < 0:
        raise ValueError("need alpha > -1 and M >= 0")
    p = jacobi(n, JacobiParams(a, a))
    xdp = X * p.derivative()
    if variant == "P":
        C0, C1 = ultraspherical_coefficients(n, a, M)
        return p * C0 - xdp * C1
    if variant == "Q":
        if 2 * a + 1 == 0:
            raise ContinuityCaseError("2*alpha + 1 = 0 is only defined by continuity")
        lead = 1 + 2 * M * binom_general(n + 2 * a + 1, n - 1)
        return p * lead - xdp * (2 * M / (2 * a + 1) * binom_general(n + 2 * a, n))
    raise ValueError(f"unknown variant {variant!r}")


@lru_cache(maxsize=None)
def _continuous_moment(k: int, a: Fraction, b: Fraction) -> Fraction:
    s = Fraction(0)
    for j in range(k + 1):
        s += binom_general(k, j) * (-2) ** j * pochhammer(a + 1, j) / pochhammer(a + b + 2, j)
    return s


def jacobi_moment(k: int, params: GeneralizedJacobiParams) -> Fraction:
    """Integral of x^k against the normalized Jacobi weight plus both point masses."""
    return _continuous_moment(k, params.alpha, params.beta) + params.M * (-1) ** k + params.N


def inner_product(p: Poly, q: Poly, params: GeneralizedJacobiParams) -> Fraction:
    pc, qc = p.coeffs, q.coeffs
    cont = Fraction(0)
    for i, ci in enumerate(pc):
        if ci:
            for j, cj in enumerate(qc):
                if cj:
                    cont += ci * cj * _continuous_moment(i + j, params.alpha, params.beta)
    return cont + params.M * p(-1) * q(-1) + params.N * p(1) * q(1)


def sobolev_inner_product(p: Poly, q: Poly, params: SobolevLaguerreParams) -> Fraction:
    """Laguerre moments (a+1)_k plus M f(0)g(0) + N f'(0)g'(0)."""
    a = params.alpha
    cont = Fraction(0)
    for i, ci in enumerate(p.coeffs):
        if ci:
            for j, cj in enumerate(q.coeffs):
                if cj:
                    cont += ci * cj * pochhammer(a + 1, i + j)
    return cont + params.M * p(0) * q(0) + params.N * p.coeff(1) * q.coeff(1)


def limit_check_generalized(n: int, alpha: RationalLike, M: RationalLike, samples, beta_schedule, tolerance=0):
    """O(1/beta) certificate for P_n^{a,beta,0,M}(1 - 2x/beta) -> L_n^{a,M}(x)."""
    a, M = as_rational(alpha), as_rational(M)
    target = sobolev_laguerre(n, SobolevLaguerreParams(a, M, 0))

    def err(beta, x0):
        return gen_jacobi(n, GeneralizedJacobiParams(a, beta, 0, M))(1 - 2 * x0 / beta) - target(x0)

    return certify_limit("limit-generalized", {"n": n, "alpha": format_rational(a), "M": format_rational(M)},
                         beta_schedule, samples, err, tolerance)
