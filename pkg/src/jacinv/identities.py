"""Inversion formulas and summation identities, checked in exact arithmetic.

Sums that should collapse to a constant return that constant (after
checking the computed polynomial really is constant) so a wrong value is
visible instead of hidden behind a boolean. Identities carrying Gamma
factors are multiplied through by Gamma(a+b+1) (or Gamma(b+1)) so that only
Pochhammer symbols remain; each function states the factor it uses.

Two-variable identities are checked by fixing y at n+1 distinct rationals
and comparing polynomials in x: both sides have degree <= n in y, so
agreement at n+1 points settles the identity.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exactnum import (
    PoleError, RationalLike, as_rational, binom_general, factorial, format_rational, pochhammer,
)
from .families import (
    Family, JacobiParams, certify_limit, charlier, jacobi, laguerre,
)
from .polyring import ONE, X, ZERO, Poly
from .report import IdentityReport

__all__ = [
    "NonConstantError", "default_y_samples",
    "inv_charlier", "inv_laguerre", "inv_jacobi", "gen_inv_laguerre",
    "master_jacobi", "master_jacobi_lhs", "master_jacobi_specializations",
    "monomial_expansion", "nulalg_sum", "vandermonde", "vandermonde_rhs",
    "vandermonde_general", "laguerre_convolution", "master_laguerre",
    "inv_jacobi_weight", "limit_check_inversion",
]


class NonConstantError(ArithmeticError):
    """A sum that must be constant in x came out with positive degree."""


def _constant(p: Poly, what: str) -> Fraction:
    if not p.is_constant():
        raise NonConstantError(f"{what}: expected a constant, got {p}")
    return p.constant_value()


def default_y_samples(n: int) -> list[Fraction]:
    """n+1 distinct rationals for bivariate sampling (0, 1/2, -1, 3/2, ...)."""
    out = []
    for m in range(n + 1):
        v = Fraction(m + 1, 2) if m % 2 else Fraction(-m, 2)
        out.append(v)
    return out


def _delta(i: int, j: int) -> Fraction:
    return Fraction(1 if i == j else 0)


# -- Charlier and Laguerre inversions -----------------------------------------

def inv_charlier(a: RationalLike, i: int, j: int) -> Fraction:
    """sum_{k=j}^{i} C_{i-k}^{(-a)}(-x) C_{k-j}^{(a)}(x); equals delta_ij."""
    if j > i:
        raise ValueError("need j <= i")
    a = as_rational(a)
    s = ZERO
    for k in range(j, i + 1):
        s = s + charlier(i - k, -a).compose_affine(-1, 0) * charlier(k - j, a)
    return _constant(s, f"inv-charlier a={format_rational(a)} i={i} j={j}")


def inv_laguerre(alpha: RationalLike, i: int, j: int, variant: str = "main") -> Fraction:
    """Laguerre inversion sums; both variants equal delta_ij.

    ``main``: sum L_{i-k}^{(-a-i-1)}(-x) L_{k-j}^{(a+j)}(x)
    ``star``: sum L_{i-k}^{(a)}(x) L_{k-j}^{(-a-2)}(-x)
    """
    if j > i:
        raise ValueError("need j <= i")
    a = as_rational(alpha)
    variant = variant.lower()
    s = ZERO
    for k in range(j, i + 1):
        if variant == "main":
            term = laguerre(i - k, -a - i - 1).compose_affine(-1, 0) * laguerre(k - j, a + j)
        elif variant == "star":
            term = laguerre(i - k, a) * laguerre(k - j, -a - 2).compose_affine(-1, 0)
        else:
            raise ValueError(f"unknown Laguerre inversion variant {variant!r}")
        s = s + term
    return _constant(s, f"inv-laguerre-{variant} alpha={format_rational(a)} i={i} j={j}")


# -- Jacobi inversion ----------------------------------------------------------

def inv_jacobi_weight(a: Fraction, b: Fraction, i: int, j: int, k: int) -> Fraction:
    """(a+b+2k+1)/(a+b+k+j+1)_{i-j+1}; raises PoleError on a vanishing denominator."""
    den = pochhammer(a + b + k + j + 1, i - j + 1)
    if den == 0:
        raise PoleError(f"(a+b+k+j+1)_(i-j+1) = 0 at a+b={format_rational(a + b)}, i={i}, j={j}, k={k}")
    return (a + b + 2 * k + 1) / den


def _inv_jacobi_poly(a: Fraction, b: Fraction, i: int, j: int, flip: bool) -> Poly:
    s = ZERO
    for k in range(j, i + 1):
        w = inv_jacobi_weight(a, b, i, j, k)
        left = jacobi(i - k, JacobiParams(-a - i - 1, -b - i - 1))
        if flip:
            left = left.compose_affine(-1, 0)
        s = s + left * jacobi(k - j, JacobiParams(a + j, b + j)) * w
    return s


def inv_jacobi(alpha: RationalLike, beta: RationalLike, i: int, j: int) -> Fraction:
    """sum_k w_k P_{i-k}^{(-a-i-1,-b-i-1)}(x) P_{k-j}^{(a+j,b+j)}(x); equals delta_ij."""
    if j > i:
        raise ValueError("need j <= i")
    a, b = as_rational(alpha), as_rational(beta)
    s = _inv_jacobi_poly(a, b, i, j, flip=False)
    return _constant(s, f"inv-jacobi a={format_rational(a)} b={format_rational(b)} i={i} j={j}")


def gen_inv_laguerre(alpha: RationalLike, p: RationalLike, q: RationalLike, n: int) -> Fraction:
    """sum_{k=0}^n L_k^{(a+p)}(x) L_{n-k}^{(-a-q)}(-x); equals (p-q+2)_n/n!."""
    a, p, q = as_rational(alpha), as_rational(p), as_rational(q)
    s = ZERO
    for k in range(n + 1):
        s = s + laguerre(k, a + p) * laguerre(n - k, -a - q).compose_affine(-1, 0)
    return _constant(s, f"gen-inv-laguerre a={format_rational(a)} p={format_rational(p)} q={format_rational(q)} n={n}")


# -- master identity and its specializations ----------------------------------

def _master_weights(a: Fraction, b: Fraction, n: int) -> list[Fraction]:
    # Both sides multiplied by Gamma(a+b+1): 1/Gamma(a+b+n+k+2) -> 1/(a+b+1)_{n+k+1}.
    out = []
    for k in range(n + 1):
        den = pochhammer(a + b + 1, n + k + 1)
        if den == 0:
            raise PoleError(f"(a+b+1)_(n+k+1) = 0 at a+b={format_rational(a + b)}, n={n}, k={k}")
        out.append((a + b + 2 * k + 1) * pochhammer(a + b + 1, k) / den)
    return out


def master_jacobi_lhs(alpha: RationalLike, beta: RationalLike, n: int, y0: RationalLike) -> Poly:
    """Normalized left side at a fixed y, as a polynomial in x."""
    a, b, y0 = as_rational(alpha), as_rational(beta), as_rational(y0)
    ws = _master_weights(a, b, n)
    s = ZERO
    for k, w in enumerate(ws):
        s = s + jacobi(k, JacobiParams(a, b)) * (w * jacobi(n - k, JacobiParams(-n - a - 1, -n - b - 1))(y0))
    return s


def master_jacobi(alpha: RationalLike, beta: RationalLike, n: int,
                  y_samples: Sequence[RationalLike] | None = None) -> IdentityReport:
    """Check sum_k w_k P_k^{(a,b)}(x) P_{n-k}^{(-n-a-1,-n-b-1)}(y) = ((x-y)/2)^n / n!."""
    a, b = as_rational(alpha), as_rational(beta)
    params = {"alpha": format_rational(a), "beta": format_rational(b)}
    ys = [as_rational(y) for y in (y_samples if y_samples is not None else default_y_samples(n))]
    if len(set(ys)) < n + 1:
        raise ValueError("need at least n+1 distinct y samples")
    rep = IdentityReport("master-jacobi", params, (n, n))
    for y0 in ys:
        lhs = master_jacobi_lhs(a, b, n, y0)
        rhs = ((X - y0) / 2) ** n / factorial(n)
        rep.record((n, format_rational(y0)), rhs, lhs)
    return rep


def master_jacobi_specializations(alpha: RationalLike, beta: RationalLike, i: int, j: int) -> IdentityReport:
    """The y = x case (delta_ij) and the y = -x case (x^(i-j)/(i-j)!) at one (i, j)."""
    if j > i:
        raise ValueError("need j <= i")
    a, b = as_rational(alpha), as_rational(beta)
    params = {"alpha": format_rational(a), "beta": format_rational(b)}
    rep = IdentityReport("master-specializations", params, (j, i))
    same = _inv_jacobi_poly(a, b, i, j, flip=False)
    rep.record((i, j, "y=x"), Poly.constant(_delta(i, j)), same)
    flipped = _inv_jacobi_poly(a, b, i, j, flip=True)
    rep.record((i, j, "y=-x"), Poly.monomial(i - j, Fraction(1, factorial(i - j))), flipped)
    return rep


# -- monomial expansions -------------------------------------------------------

def monomial_expansion(family: Family | str, params, n: int) -> IdentityReport:
    """Expand the monomial x^n/n! (Laguerre) or ((1-x)/2)^n (Jacobi) in the family."""
    family = Family(family)
    if family is Family.LAGUERRE:
        a = params.alpha
        s = ZERO
        for k in range(n + 1):
            s = s + laguerre(k, a) * ((-1) ** k * binom_general(n + a, n - k))
        target = Poly.monomial(n, Fraction(1, factorial(n)))
    else:
        a, b = params.alpha, params.beta
        # Multiplied through by Gamma(a+b+1).
        s = ZERO
        for k in range(n + 1):
            den = pochhammer(a + b + 1, n + k + 1)
            if den == 0:
                raise PoleError(f"(a+b+1)_(n+k+1) = 0 at a+b={format_rational(a + b)}, n={n}, k={k}")
            c = pochhammer(-n, k) * pochhammer(a + b + 1, k) * pochhammer(a + k + 1, n - k) * (a + b + 2 * k + 1)
            s = s + jacobi(k, params) * (c / den)
        target = ((1 - X) / 2) ** n
    return IdentityReport.from_pair(f"monomial-{family.value}", params.as_dict(), (n, n), (n,), target, s)


# -- hypergeometric sums -------------------------------------------------------

def nulalg_sum(b: RationalLike, n: int) -> Fraction:
    """sum_k (-n)_k (b)_k (b+2k) / ((b+1)_{n+k} k!), i.e. the Gamma(b+1)-normalized sum.

    Vanishes for every n >= 1; equals b at n = 0.
    """
    b = as_rational(b)
    s = Fraction(0)
    for k in range(n + 1):
        den = pochhammer(b + 1, n + k)
        if den == 0:
            raise PoleError(f"(b+1)_(n+k) = 0 at b={format_rational(b)}, n={n}, k={k}")
        s += pochhammer(-n, k) * pochhammer(b, k) * (b + 2 * k) / (den * factorial(k))
    return s


def vandermonde(b: RationalLike, c: RationalLike, n: int) -> Fraction:
    """Terminating 2F1(-n, b; c; 1) = sum_k (-n)_k (b)_k / ((c)_k k!)."""
    b, c = as_rational(b), as_rational(c)
    s = Fraction(0)
    for k in range(n + 1):
        ck = pochhammer(c, k)
        if ck == 0:
            raise PoleError(f"(c)_{k} = 0 at c={format_rational(c)}")
        s += pochhammer(-n, k) * pochhammer(b, k) / (ck * factorial(k))
    return s


def vandermonde_rhs(b: RationalLike, c: RationalLike, n: int) -> Fraction:
    b, c = as_rational(b), as_rational(c)
    cn = pochhammer(c, n)
    if cn == 0:
        raise PoleError(f"(c)_{n} = 0 at c={format_rational(c)}")
    return pochhammer(c - b, n) / cn


def vandermonde_general(b: RationalLike, c: RationalLike, n: int) -> tuple[Fraction, Fraction]:
    """Both sides of the Gamma-free form valid for every b and c.

    Multiplying the 1/Gamma(c+k) version by Gamma(c+n) turns each
    Gamma(c+n)/Gamma(c+k) into (c+k)_{n-k}, a polynomial in c, so no pole
    guard is needed: returns (sum_k (-n)_k (b)_k (c+k)_{n-k} / k!, (c-b)_n).
    """
    b, c = as_rational(b), as_rational(c)
    lhs = sum((pochhammer(-n, k) * pochhammer(b, k) * pochhammer(c + k, n - k) / factorial(k)
               for k in range(n + 1)), Fraction(0))
    return lhs, pochhammer(c - b, n)


# -- Laguerre convolution ------------------------------------------------------

def laguerre_convolution(alpha: RationalLike, beta2: RationalLike, n: int,
                         y_samples: Sequence[RationalLike] | None = None) -> IdentityReport:
    """sum_k L_k^{(a)}(x) L_{n-k}^{(b)}(y) = L_n^{(a+b+1)}(x+y), sampled in y."""
    a, b = as_rational(alpha), as_rational(beta2)
    ys = [as_rational(y) for y in (y_samples if y_samples is not None else default_y_samples(n))]
    rep = IdentityReport("convolution", {"alpha": format_rational(a), "beta": format_rational(b)}, (n, n))
    rhs_poly = laguerre(n, a + b + 1)
    for y0 in ys:
        lhs = ZERO
        for k in range(n + 1):
            lhs = lhs + laguerre(k, a) * laguerre(n - k, b)(y0)
        rep.record((n, format_rational(y0)), rhs_poly.compose_affine(1, y0), lhs)
    return rep


def master_laguerre(alpha: RationalLike, n: int,
                    y_samples: Sequence[RationalLike] | None = None) -> IdentityReport:
    """sum_k L_k^{(a)}(x) L_{n-k}^{(-n-a-1)}(-y) = (y-x)^n/n!, sampled in y."""
    a = as_rational(alpha)
    ys = [as_rational(y) for y in (y_samples if y_samples is not None else default_y_samples(n))]
    rep = IdentityReport("master-laguerre", {"alpha": format_rational(a)}, (n, n))
    for y0 in ys:
        lhs = ZERO
        for k in range(n + 1):
            lhs = lhs + laguerre(k, a) * laguerre(n - k, -n - a - 1)(-y0)
        rep.record((n, format_rational(y0)), (y0 - X) ** n / factorial(n), lhs)
    return rep


# -- inversion limit -----------------------------------------------------------

def limit_check_inversion(alpha: RationalLike, i: int, j: int, samples, beta_schedule, tolerance=0):
    """Term-by-term O(1/beta) certificate for the Jacobi-to-Laguerre inversion limit.

    Summand k of the Jacobi inversion sum, taken at 1 - 2x/beta and scaled by
    beta^(i-j), should approach L_{i-k}^{(-a-i-1)}(-x) L_{k-j}^{(a+j)}(x).
    The error at each sample is the largest deviation over k.
    """
    a = as_rational(alpha)

    def err(beta, x0):
        t = 1 - 2 * x0 / beta
        worst = Fraction(0)
        for k in range(j, i + 1):
            w = inv_jacobi_weight(a, beta, i, j, k)
            jac = (w * jacobi(i - k, JacobiParams(-a - i - 1, -beta - i - 1))(t)
                   * jacobi(k - j, JacobiParams(a + j, beta + j))(t) * beta ** (i - j))
            lag = laguerre(i - k, -a - i - 1)(-x0) * laguerre(k - j, a + j)(x0)
            worst = max(worst, abs(jac - lag))
        return worst

    return certify_limit("limit-inversion", {"alpha": format_rational(a), "i": i, "j": j},
                         beta_schedule, samples, err, tolerance)
