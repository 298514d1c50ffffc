"""Command-line driver: ``jacinv eval | verify | solve``.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 invalid
configuration (bad flags, pole or singular parameters, range violations).
``verify`` writes one JSON object per parameter point (JSON lines).
"""
from __future__ import annotations

import argparse
import json
import logging
import random
import re
import sys
from fractions import Fraction
from typing import Callable, Iterable

from .exactnum import PoleError, factorial, format_rational, parse_rational, pochhammer
from .families import (
    Family, JacobiDef, JacobiParams, LaguerreParams, charlier, check_derivative_shift, jacobi, laguerre,
    limit_check_jacobi_to_laguerre, ode_residual,
)
from .genfamilies import GeneralizedJacobiParams, SobolevLaguerreParams, gen_jacobi, sobolev_laguerre, sym_ultraspherical
from .identities import (
    NonConstantError, gen_inv_laguerre, inv_charlier, inv_jacobi, inv_laguerre, laguerre_convolution,
    limit_check_inversion, master_jacobi, master_jacobi_specializations, master_laguerre,
    monomial_expansion, nulalg_sum, vandermonde, vandermonde_general, vandermonde_rhs,
)
from .polyring import ZERO, parse_poly
from .report import IdentityReport
from .solver import (
    ResidualError, SingularError, TriangularSystem, build_T, build_U, is_singular, matmul,
    random_system, solution_record, solve_backsub, solve_closed_form,
)

log = logging.getLogger("jacinv")

LIMIT_SAMPLES = (Fraction(1, 2), Fraction(1), Fraction(2))
LIMIT_SCHEDULE = (2 ** 4, 2 ** 8, 2 ** 12, 2 ** 16)


class ConfigError(ValueError):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


# -- eval ----------------------------------------------------------------------

def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise ConfigError("missing --" + ", --".join(missing))


def cmd_eval(args) -> int:
    fam, n = args.family, args.n
    if n < 0:
        raise ConfigError("--n must be nonnegative")
    if fam == "jacobi":
        _need(args, "alpha", "beta")
        p = jacobi(n, JacobiParams(args.alpha, args.beta), JacobiDef(args.variant or "Def1"))
    elif fam == "laguerre":
        _need(args, "alpha")
        p = laguerre(n, args.alpha)
    elif fam == "charlier":
        _need(args, "a")
        p = charlier(n, args.a)
    elif fam == "gen-jacobi":
        _need(args, "alpha", "beta")
        p = gen_jacobi(n, GeneralizedJacobiParams(args.alpha, args.beta, args.M or 0, args.N or 0))
    elif fam == "sobolev-laguerre":
        _need(args, "alpha")
        p = sobolev_laguerre(n, SobolevLaguerreParams(args.alpha, args.M or 0, args.N or 0))
    elif fam == "sym-ultra":
        _need(args, "alpha")
        p = sym_ultraspherical(n, args.alpha, args.M or 0, args.variant or "P")
    else:  # argparse restricts choices
        raise ConfigError(f"unknown family {fam}")
    print(p)
    return 0


# -- verify ----------------------------------------------------------------------

def _rand_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _points(args, names: tuple[str, ...]) -> list[dict[str, Fraction]]:
    """Explicit flags give a single point; otherwise ``--grid`` seeded random points."""
    given = {n: getattr(args, n) for n in names}
    if any(v is not None for v in given.values()):
        rng = random.Random(args.seed)
        return [{n: (v if v is not None else _rand_rational(rng)) for n, v in given.items()}]
    if args.grid < 1:
        raise ConfigError("--grid must be at least 1")
    rng = random.Random(args.seed)
    return [{n: _rand_rational(rng) for n in names} for _ in range(args.grid)]


def _delta(i, j):
    return Fraction(int(i == j))


def _v_inv_jacobi(pt, K):
    rep = IdentityReport("inv-jacobi", _fmt(pt), (0, K))
    for i in range(K + 1):
        for j in range(i + 1):
            rep.record((i, j), _delta(i, j), inv_jacobi(pt["alpha"], pt["beta"], i, j))
    return rep


def _v_inv_laguerre(variant):
    def run(pt, K):
        rep = IdentityReport("inv-laguerre" + ("-star" if variant == "star" else ""), _fmt(pt), (0, K))
        for i in range(K + 1):
            for j in range(i + 1):
                rep.record((i, j), _delta(i, j), inv_laguerre(pt["alpha"], i, j, variant))
        return rep
    return run


def _v_inv_charlier(pt, K):
    rep = IdentityReport("inv-charlier", _fmt(pt), (0, K))
    for i in range(K + 1):
        for j in range(i + 1):
            rep.record((i, j), _delta(i, j), inv_charlier(pt["a"], i, j))
    return rep


def _v_gen_inv(pt, K):
    rep = IdentityReport("gen-inv-laguerre", _fmt(pt), (0, K))
    d = pt["p"] - pt["q"]
    for n in range(K + 1):
        rep.record((n,), pochhammer(d + 2, n) / factorial(n), gen_inv_laguerre(pt["alpha"], pt["p"], pt["q"], n))
    return rep


def _v_master(pt, K):
    rep = IdentityReport("master-jacobi", _fmt(pt), (0, K))
    for n in range(K + 1):
        sub = master_jacobi(pt["alpha"], pt["beta"], n)
        _merge(rep, sub)
    return rep


def _v_master_spec(pt, K):
    rep = IdentityReport("master-specializations", _fmt(pt), (0, K))
    for i in range(K + 1):
        for j in range(i + 1):
            _merge(rep, master_jacobi_specializations(pt["alpha"], pt["beta"], i, j))
    return rep


def _v_monomial(family):
    def run(pt, K):
        rep = IdentityReport(f"monomial-{family}", _fmt(pt), (0, K))
        params = LaguerreParams(pt["alpha"]) if family == "laguerre" else JacobiParams(pt["alpha"], pt["beta"])
        for n in range(K + 1):
            _merge(rep, monomial_expansion(family, params, n))
        return rep
    return run


def _v_nulalg(pt, K):
    rep = IdentityReport("nulalg", _fmt(pt), (0, K))
    for n in range(K + 1):
        rep.record((n,), pt["b"] if n == 0 else Fraction(0), nulalg_sum(pt["b"], n))
    return rep


def _v_vandermonde(pt, K):
    rep = IdentityReport("vandermonde", _fmt(pt), (0, K))
    for n in range(K + 1):
        lhs, rhs = vandermonde_general(pt["b"], pt["c"], n)
        rep.record((n, "general"), rhs, lhs)
        rep.record((n,), vandermonde_rhs(pt["b"], pt["c"], n), vandermonde(pt["b"], pt["c"], n))
    return rep


def _v_convolution(pt, K):
    rep = IdentityReport("convolution", _fmt(pt), (0, K))
    for n in range(K + 1):
        _merge(rep, laguerre_convolution(pt["alpha"], pt["beta"], n))
        _merge(rep, master_laguerre(pt["alpha"], n))
    return rep


def _v_tu(pt, K):
    params = JacobiParams(pt["alpha"], pt["beta"])
    rep = IdentityReport("tu-product", _fmt(pt), (K, K))
    if is_singular(params):
        try:
            build_U(K, params)
            outcome = "no error"
        except SingularError:
            outcome = "SingularError"
        rep.record((K, "singular"), "SingularError", outcome)
        return rep
    T, U = build_T(K, params), build_U(K, params)
    for label, prod in (("TU", matmul(T, U)), ("UT", matmul(U, T))):
        for i in range(K + 1):
            for j in range(i + 1):
                rep.record((label, i, j), _delta(i, j), prod[i, j])
    return rep


def _v_tridef(pt, K):
    params = JacobiParams(pt["alpha"], pt["beta"])
    rep = IdentityReport("tri-def", _fmt(pt), (0, K))
    for n in range(K + 1):
        ref = jacobi(n, params, JacobiDef.DEF1)
        rep.record((n, "Def2"), ref, jacobi(n, params, JacobiDef.DEF2))
        rep.record((n, "Def3"), ref, jacobi(n, params, JacobiDef.DEF3))
    return rep


def _v_ode(pt, K):
    jp, lp = JacobiParams(pt["alpha"], pt["beta"]), LaguerreParams(pt["alpha"])
    rep = IdentityReport("ode", _fmt(pt), (0, K))
    for n in range(K + 1):
        rep.record((n, "jacobi"), ZERO, ode_residual(Family.JACOBI, jacobi(n, jp), n, jp))
        rep.record((n, "laguerre"), ZERO, ode_residual(Family.LAGUERRE, laguerre(n, lp), n, lp))
    return rep


def _v_diff(pt, K):
    jp, lp = JacobiParams(pt["alpha"], pt["beta"]), LaguerreParams(pt["alpha"])
    rep = IdentityReport("diff-shift", _fmt(pt), (0, K))
    for n in range(K + 1):
        for i in range(n + 1):
            _merge(rep, check_derivative_shift(Family.JACOBI, n, i, jp))
            _merge(rep, check_derivative_shift(Family.LAGUERRE, n, i, lp))
    return rep


def _v_limit(pt, K, tolerance=0):
    rep = IdentityReport("limit", _fmt(pt), (0, K))
    for n in range(K + 1):
        cert = limit_check_jacobi_to_laguerre(n, pt["alpha"], LIMIT_SAMPLES, LIMIT_SCHEDULE, tolerance)
        rep.record(("limit", n), True, cert.passed) or _note(rep, cert)
    for i in range(K + 1):
        for j in range(i + 1):
            cert = limit_check_inversion(pt["alpha"], i, j, LIMIT_SAMPLES, LIMIT_SCHEDULE, tolerance)
            rep.record(("inversion", i, j), True, cert.passed) or _note(rep, cert)
    return rep


def _note(rep, cert):
    log.info("limit certificate %s %s failed: %s", cert.label, cert.params, json.dumps(cert.as_dict()))


def _merge(into: IdentityReport, sub: IdentityReport) -> None:
    into.checks += sub.checks
    if into.first_failure is None and sub.first_failure is not None:
        into.first_failure = sub.first_failure


def _fmt(pt):
    return {k: format_rational(v) for k, v in pt.items()}


VERIFIERS: dict[str, tuple[tuple[str, ...], Callable]] = {
    "inv-jacobi": (("alpha", "beta"), _v_inv_jacobi),
    "inv-laguerre": (("alpha",), _v_inv_laguerre("main")),
    "inv-laguerre-star": (("alpha",), _v_inv_laguerre("star")),
    "inv-charlier": (("a",), _v_inv_charlier),
    "gen-inv-laguerre": (("alpha", "p", "q"), _v_gen_inv),
    "master-jacobi": (("alpha", "beta"), _v_master),
    "master-specializations": (("alpha", "beta"), _v_master_spec),
    "monomial-laguerre": (("alpha",), _v_monomial("laguerre")),
    "monomial-jacobi": (("alpha", "beta"), _v_monomial("jacobi")),
    "nulalg": (("b",), _v_nulalg),
    "vandermonde": (("b", "c"), _v_vandermonde),
    "convolution": (("alpha", "beta"), _v_convolution),
    "tu-product": (("alpha", "beta"), _v_tu),
    "tri-def": (("alpha", "beta"), _v_tridef),
    "ode": (("alpha", "beta"), _v_ode),
    "diff-shift": (("alpha", "beta"), _v_diff),
    "limit": (("alpha",), _v_limit),
}


def run_verify(identity: str, points: Iterable[dict], order_max: int, tolerance=0) -> list[IdentityReport]:
    names, fn = VERIFIERS[identity]
    reports = []
    for pt in points:
        try:
            rep = fn(pt, order_max, tolerance) if identity == "limit" else fn(pt, order_max)
        except PoleError as exc:
            log.info("skipping pole point %s: %s", _fmt(pt), exc)
            rep = IdentityReport.skip(identity, _fmt(pt), (0, order_max), f"pole: {exc}")
        reports.append(rep)
    return reports


def cmd_verify(args) -> int:
    if args.identity not in VERIFIERS:
        raise ConfigError(f"unknown identity {args.identity!r}; choose from {', '.join(VERIFIERS)}")
    if args.order_max < 0:
        raise ConfigError("--order-max must be nonnegative")
    names, _ = VERIFIERS[args.identity]
    points = _points(args, names)
    tol = Fraction(args.tolerance) if args.tolerance is not None else 0
    reports = run_verify(args.identity, points, args.order_max, tol)
    text = "".join(r.to_json() + "\n" for r in reports)
    _emit(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


# -- solve ---------------------------------------------------------------------

def _read_rhs(path: str):
    with open(path, encoding="utf-8") as fh:
        raw = fh.read()
    try:
        items = json.loads(raw)
    except json.JSONDecodeError:
        items = [ln for ln in raw.splitlines() if ln.strip()]
    if not isinstance(items, list) or not all(isinstance(s, str) for s in items):
        raise ConfigError("rhs file must be a JSON array of polynomial strings or one polynomial per line")
    return tuple(parse_poly(s) for s in items)


def cmd_solve(args) -> int:
    if args.order < 1:
        raise ConfigError("--order must be at least 1")
    if args.family == "jacobi":
        _need(args, "alpha", "beta")
        if args.shift:
            raise ConfigError("--shift applies only to the Laguerre family")
        params = JacobiParams(args.alpha, args.beta)
    else:
        _need(args, "alpha")
        params = args.alpha
    if args.rhs == "random":
        system = random_system(args.family, params, args.order, args.seed, args.shift)
        seed = args.seed
    else:
        if not args.rhs_file:
            raise ConfigError("--rhs file needs --rhs-file PATH")
        rhs = _read_rhs(args.rhs_file)
        if len(rhs) != args.order:
            raise ConfigError(f"rhs file has {len(rhs)} polynomials, --order is {args.order}")
        system = TriangularSystem(args.family, params, rhs, args.shift)
        seed = None
    try:
        closed = solve_closed_form(system)
        back = solve_backsub(system)
        ok = closed == back
    except ResidualError as exc:
        log.error("%s", exc)
        closed, ok = solve_closed_form(system, check=False), False
    rec = solution_record(system, closed, ok, seed)
    _emit(json.dumps(rec, sort_keys=True) + "\n", args.out)
    return 0 if ok else 1


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- entry point -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    for flag in ("alpha", "beta", "a", "M", "N", "b", "c", "p", "q"):
        common.add_argument(f"--{flag}", type=_rational, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="jacinv", description="Exact orthogonal-polynomial identities")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", parents=[common], help="print a family member")
    ev.add_argument("--family", required=True,
                    choices=["jacobi", "laguerre", "charlier", "gen-jacobi", "sobolev-laguerre", "sym-ultra"])
    ev.add_argument("--n", type=int, required=True)
    ev.add_argument("--variant", default=None, help="Def1/Def2/Def3 for jacobi, P/Q for sym-ultra")

    ve = sub.add_parser("verify", parents=[common], help="check an identity over a parameter grid")
    ve.add_argument("--identity", required=True)
    ve.add_argument("--order-max", type=int, default=8)
    ve.add_argument("--grid", type=int, default=10)
    ve.add_argument("--tolerance", type=float, default=None,
                    help="relative slack for the limit certificates only")

    so = sub.add_parser("solve", parents=[common], help="solve a triangular coefficient system")
    so.add_argument("--family", required=True, choices=["jacobi", "laguerre"])
    so.add_argument("--order", type=int, required=True)
    so.add_argument("--shift", type=int, default=0)
    so.add_argument("--rhs", choices=["random", "file"], default="random")
    so.add_argument("--rhs-file", default=None)
    return parser


_NEG_FRACTION = re.compile(r"^-\d+/\d+$")


def _join_negative_fractions(argv: list[str]) -> list[str]:
    # argparse takes "-1/2" for an option string; glue it to the preceding flag
    out: list[str] = []
    for tok in argv:
        if out and out[-1].startswith("--") and "=" not in out[-1] and _NEG_FRACTION.match(tok):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_negative_fractions(list(sys.argv[1:] if argv is None else argv)))
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    handler = {"eval": cmd_eval, "verify": cmd_verify, "solve": cmd_solve}[args.command]
    try:
        return handler(args)
    except (ConfigError, PoleError, SingularError, ValueError) as exc:
        print(f"jacinv: error: {exc}", file=sys.stderr)
        return 2
    except NonConstantError as exc:
        print(f"jacinv: check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
