"""Time the Cython kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--json out.json]

Runs raw kernel calls and two end-to-end workloads (a Jacobi inversion
sweep and a closed-form solve) on each available backend, clearing the
family caches between runs so both backends do the same work.
"""
import argparse
import json
import random
import sys
import timeit
from fractions import Fraction

from jacinv import families, kernels
from jacinv.identities import inv_jacobi
from jacinv.solver import random_system, solve_closed_form


def _clear_caches():
    for fn in (families._jacobi_cached, families._laguerre_cached, families._charlier_cached, families._powers):
        fn.cache_clear()


def _ints(rng, n, bits):
    return [rng.getrandbits(bits) - (1 << (bits - 1)) for _ in range(n)]


def workloads():
    rng = random.Random(0)
    a, b = _ints(rng, 40, 200), _ints(rng, 40, 200)
    c = _ints(rng, 30, 120)

    def inversion_sweep():
        _clear_caches()
        for i in range(11):
            for j in range(i + 1):
                inv_jacobi(Fraction(1, 3), Fraction(-2, 7), i, j)

    def solve():
        _clear_caches()
        solve_closed_form(random_system("jacobi", families.JacobiParams(Fraction(1, 2), Fraction(1, 3)), 8, 42))

    return {
        "convolve 40x40 (200-bit)": lambda: kernels.convolve(a, b),
        "horner deg 29": lambda: kernels.horner(c, 7, 11),
        "derive order 3": lambda: kernels.derive(c, 3),
        "affine_horner deg 29": lambda: kernels.affine_horner(c, 3, -5, 7),
        "inv_jacobi sweep i<=10": inversion_sweep,
        "solve_closed_form N=8": solve,
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", default=None)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    results = {}
    for name, fn in workloads().items():
        row = {}
        for be in backends:
            kernels.set_backend(be)
            number = 1 if "sweep" in name or "solve" in name else 200
            row[be] = min(timeit.repeat(fn, number=number, repeat=args.repeat)) / number
        results[name] = row
    kernels.set_backend(backends[0])

    width = max(map(len, results))
    print(f"{'workload':<{width}}  " + "  ".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, row in results.items():
        cells = "  ".join(f"{row[b] * 1e3:10.3f}ms" for b in backends)
        extra = f"  {row['python'] / row['cython']:9.2f}x" if "cython" in row else ""
        print(f"{name:<{width}}  {cells}{extra}")
    if "cython" not in backends:
        print("compiled kernels not built; only the Python fallback was timed", file=sys.stderr)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(results, fh, indent=2)


if __name__ == "__main__":
    main()
