"""Triangular systems sum_i A_i(x) D^(i+k) P_n(x) = F_n(x) and their inverses.

``solve_closed_form`` applies the explicit inverse matrices; ``solve_backsub``
eliminates row by row and never touches the inversion formulas, so the two
serve as independent checks on each other.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactnum import PoleError, as_rational, format_rational, pochhammer
from .families import JacobiParams, jacobi, laguerre
from .polyring import ZERO, Poly

__all__ = [
    "SingularError", "ResidualError", "TriangularPolyMatrix", "TriangularSystem",
    "is_singular", "build_T", "build_U", "matmul",
    "solve_closed_form", "solve_backsub", "residuals", "perturbation_breaks",
    "random_rhs", "random_system", "solution_record",
]


class SingularError(ArithmeticError):
    """The triangular matrix D^j P_i has a vanishing diagonal for some order."""


class ResidualError(ArithmeticError):
    """A computed solution does not satisfy its own system."""


@dataclass(frozen=True)
class TriangularPolyMatrix:
    """Lower-triangular (size x size) matrix; ``rows[i]`` holds entries j = 0..i."""

    rows: tuple[tuple[Poly, ...], ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij) -> Poly:
        i, j = ij
        return self.rows[i][j] if j <= i else ZERO

    def is_identity(self) -> bool:
        return all(self[i, j] == (1 if i == j else 0) for i in range(self.size) for j in range(i + 1))


def matmul(s: TriangularPolyMatrix, t: TriangularPolyMatrix) -> TriangularPolyMatrix:
    if s.size != t.size:
        raise ValueError("size mismatch")
    rows = []
    for i in range(s.size):
        row = []
        for j in range(i + 1):
            acc = ZERO
            for m in range(j, i + 1):
                acc = acc + s[i, m] * t[m, j]
            row.append(acc)
        rows.append(tuple(row))
    return TriangularPolyMatrix(tuple(rows))


def is_singular(params: JacobiParams) -> bool:
    """True iff -(a+b+2) is a nonnegative integer."""
    s = -(params.alpha + params.beta + 2)
    return s.denominator == 1 and s >= 0


def _check_invertible(params: JacobiParams) -> None:
    if is_singular(params):
        raise SingularError(
            f"a+b+2 = {format_rational(params.alpha + params.beta + 2)}: "
            "the diagonal (i+a+b+1)_i/2^i vanishes for some i")


def build_T(n: int, params: JacobiParams) -> TriangularPolyMatrix:
    """t_ij = D^j P_i^(a,b)(x) for 0 <= j <= i <= n."""
    return TriangularPolyMatrix(tuple(
        tuple(jacobi(i, params).derivative(j) for j in range(i + 1)) for i in range(n + 1)))


def _u_entry(params: JacobiParams, i: int, j: int) -> Poly:
    a, b = params.alpha, params.beta
    den = pochhammer(a + b + j + 1, i + 1)
    if den == 0:
        raise PoleError(f"(a+b+j+1)_(i+1) = 0 at a+b={format_rational(a + b)}, i={i}, j={j}")
    c = (a + b + 2 * j + 1) * 2 ** i / den
    return jacobi(i - j, JacobiParams(-a - i - 1, -b - i - 1)) * c


def build_U(n: int, params: JacobiParams) -> TriangularPolyMatrix:
    """Closed-form inverse of :func:`build_T`; no generic inversion happens."""
    _check_invertible(params)
    return TriangularPolyMatrix(tuple(
        tuple(_u_entry(params, i, j) for j in range(i + 1)) for i in range(n + 1)))


@dataclass(frozen=True)
class TriangularSystem:
    """Equations n = k+1 .. k+N of sum_i A_i D^(i+k) Y_n = F_n.

    ``rhs[m]`` is F_{k+1+m}. Jacobi systems have k = 0.
    """

    family: str
    params: JacobiParams | Fraction
    rhs: tuple[Poly, ...]
    shift: int = 0

    def __post_init__(self):
        if self.family not in ("jacobi", "laguerre"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "jacobi" and self.shift != 0:
            raise ValueError("Jacobi systems carry no shift")
        if self.shift < 0:
            raise ValueError("shift must be nonnegative")
        object.__setattr__(self, "rhs", tuple(self.rhs))
        if self.family == "laguerre" and not isinstance(self.params, Fraction):
            p = self.params
            object.__setattr__(self, "params", as_rational(getattr(p, "alpha", p)))

    @property
    def order(self) -> int:
        return len(self.rhs)

    def family_poly(self, n: int) -> Poly:
        if self.family == "jacobi":
            return jacobi(n, self.params)
        return laguerre(n, self.params)

    def coefficient(self, n: int, i: int) -> Poly:
        """D^(i+k) applied to the degree-n family member."""
        return self.family_poly(n).derivative(i + self.shift)

    def params_dict(self) -> dict:
        if self.family == "jacobi":
            return self.params.as_dict()
        return {"alpha": format_rational(self.params)}


def _guard(system: TriangularSystem) -> None:
    if system.family == "jacobi":
        _check_invertible(system.params)


def solve_closed_form(system: TriangularSystem, check: bool = True) -> list[Poly]:
    """A_1..A_N from the explicit inverse, then verified by substitution."""
    _guard(system)
    N, k = system.order, system.shift
    sol = []
    if system.family == "jacobi":
        a, b = system.params.alpha, system.params.beta
        for i in range(1, N + 1):
            acc = ZERO
            for j in range(1, i + 1):
                den = pochhammer(a + b + j + 1, i + 1)
                if den == 0:
                    raise PoleError(f"(a+b+j+1)_(i+1) = 0 at a+b={format_rational(a + b)}, i={i}, j={j}")
                c = (a + b + 2 * j + 1) / den
                acc = acc + jacobi(i - j, JacobiParams(-a - i - 1, -b - i - 1)) * system.rhs[j - 1] * c
            sol.append(acc * 2 ** i)
    else:
        a = system.params
        for i in range(1, N + 1):
            acc = ZERO
            for j in range(1, i + 1):
                acc = acc + laguerre(i - j, -a - i - k - 1).compose_affine(-1, 0) * system.rhs[j - 1]
            sol.append(acc if (i + k) % 2 == 0 else -acc)
    if check:
        _assert_residuals(system, sol)
    return sol


def solve_backsub(system: TriangularSystem, check: bool = True) -> list[Poly]:
    """A_m = (F - sum_{i<m} A_i D^(i+k) Y_n) / D^(m+k) Y_n, row n = m + k."""
    _guard(system)
    k = system.shift
    sol: list[Poly] = []
    for m in range(1, system.order + 1):
        n = m + k
        acc = system.rhs[m - 1]
        for i in range(1, m):
            acc = acc - sol[i - 1] * system.coefficient(n, i)
        diag = system.coefficient(n, m)
        if diag.is_zero():
            raise SingularError(f"zero diagonal D^{m + k} Y_{n}")
        sol.append(acc / diag.constant_value())
    if check:
        _assert_residuals(system, sol)
    return sol


def residuals(system: TriangularSystem, sol: Sequence[Poly]) -> list[Poly]:
    """sum_i A_i D^(i+k) Y_n - F_n for every equation n = k+1 .. k+N."""
    out = []
    for m in range(1, system.order + 1):
        n = m + system.shift
        acc = -system.rhs[m - 1]
        for i in range(1, min(m, len(sol)) + 1):
            acc = acc + sol[i - 1] * system.coefficient(n, i)
        out.append(acc)
    return out


def _assert_residuals(system, sol) -> None:
    for m, r in enumerate(residuals(system, sol), start=1):
        if not r.is_zero():
            raise ResidualError(f"equation {m + system.shift} has residual {r}")


def perturbation_breaks(system: TriangularSystem, sol: Sequence[Poly], index: int, delta: Poly) -> bool:
    """True when adding ``delta`` to A_index leaves some equation unsatisfied."""
    if delta.is_zero():
        raise ValueError("perturbation must be nonzero")
    bumped = list(sol)
    bumped[index - 1] = bumped[index - 1] + delta
    return any(not r.is_zero() for r in residuals(system, bumped))


def random_rhs(rng: random.Random, degree: int) -> Poly:
    """Coefficients num/den with num in [-9, 9], den in [1, 9]."""
    return Poly([Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(degree + 1)])


def random_system(family: str, params, order: int, seed: int, shift: int = 0) -> TriangularSystem:
    """F_n of degree <= n drawn from ``random.Random(seed)``."""
    rng = random.Random(seed)
    rhs = [random_rhs(rng, shift + m) for m in range(1, order + 1)]
    return TriangularSystem(family, params, tuple(rhs), shift)


def solution_record(system: TriangularSystem, sol: Sequence[Poly], residuals_zero: bool, seed) -> dict:
    return {
        "order": system.order,
        "family": system.family,
        "shift": system.shift,
        "params": system.params_dict(),
        "rhs": [str(f) for f in system.rhs],
        "solution": [str(a) for a in sol],
        "residuals_zero": residuals_zero,
        "seed": seed,
    }
