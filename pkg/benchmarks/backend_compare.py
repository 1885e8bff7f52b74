"""Compare the compiled kernels against the pure-Python fallback.

Runs the three indeterminate-capable searchers over a small instance
grid with both kernel implementations and prints per-cell times plus
the speedup. Usage::

    python3 benchmarks/backend_compare.py [--quick]
"""

import argparse
import sys
import time

from indetmatch import GenSpec, generate
from indetmatch import _pykernels

try:
    from indetmatch import _ckernels
except ImportError:
    _ckernels = None

GRID = [
    GenSpec(sigma=4, n=100_000, m=20, k1=0, k2=0, seed=101),
    GenSpec(sigma=4, n=100_000, m=20, k1=1_000, k2=2, seed=102),
    GenSpec(sigma=9, n=100_000, m=50, k1=10_000, k2=5, seed=103),
    GenSpec(sigma=2, n=50_000, m=10, k1=50_000, k2=10, seed=104),
]

QUICK_GRID = [
    GenSpec(sigma=4, n=20_000, m=20, k1=200, k2=2, seed=101),
]


def time_call(fn, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="one small instance only")
    args = parser.parse_args(argv)

    if _ckernels is None:
        print("compiled kernels are not available; build with pip install -e .", file=sys.stderr)
        return 1

    grid = QUICK_GRID if args.quick else GRID
    print(f"{'instance':34s} {'searcher':10s} {'pure (s)':>10s} {'compiled (s)':>13s} {'speedup':>8s}")
    for spec in grid:
        text, pattern = generate(spec)
        y, q = text.values, pattern.values
        primes = text.alphabet.primes
        label = f"sigma={spec.sigma} n={spec.n} k1={spec.k1} m={spec.m} k2={spec.k2}"
        searchers = [
            ("bf", lambda mod: mod.bf_search(y, q)),
            ("kmp-indet", lambda mod: mod.kmp_indet(y, q)),
            ("bm-indet", lambda mod: mod.bm_indet(y, q, primes)),
        ]
        for name, call in searchers:
            t_py, r_py = time_call(lambda: call(_pykernels))
            t_c, r_c = time_call(lambda: call(_ckernels))
            if tuple(r_py) != tuple(r_c):
                print(f"MISMATCH between backends on {label} / {name}", file=sys.stderr)
                return 1
            print(f"{label:34s} {name:10s} {t_py:10.4f} {t_c:13.4f} {t_py / t_c:7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
