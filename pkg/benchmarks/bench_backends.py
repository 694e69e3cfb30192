#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times GF(p) rank elimination and polynomial gcd on growing sizes, then the
closed-form rank path against the elimination oracle on a 512x512 double
circulant.  Run after `pip install -e .`:

    python benchmarks/bench_backends.py
"""

import random
import time

import numpy as np

from circrank import _kernels_numpy as knp

try:
    from circrank import _kernels_numba as knb
    HAVE_NUMBA = True
except ImportError:
    knb = None
    HAVE_NUMBA = False

P = 65521
REPEATS = 5


def timeit(fn, *args, repeats=REPEATS):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_rank(rng):
    print(f"{'rank over GF(65521)':<34} {'numpy':>10} {'numba':>10} {'speedup':>9}")
    for size in (32, 128, 512):
        mat = rng.integers(0, P, size=(size, size)).astype(np.int64)
        t_np, r_np = timeit(knp.rank_mod_p, mat, P)
        line = f"  {size}x{size:<28} {t_np * 1e3:9.2f}ms"
        if HAVE_NUMBA:
            t_nb, r_nb = timeit(knb.rank_mod_p, mat, P)
            assert r_np == r_nb, "backends disagree"
            line += f" {t_nb * 1e3:9.2f}ms {t_np / t_nb:8.1f}x"
        print(line)


def bench_gcd(rng):
    print(f"\n{'poly gcd over GF(65521)':<34} {'numpy':>10} {'numba':>10} {'speedup':>9}")
    for deg in (64, 256, 1024):
        a = rng.integers(0, P, size=deg + 1).astype(np.int64)
        b = rng.integers(0, P, size=deg).astype(np.int64)
        a[-1], b[-1] = 1, 1
        t_np, g_np = timeit(knp.poly_gcd, a, b, P)
        line = f"  deg {deg:<26} {t_np * 1e3:9.2f}ms"
        if HAVE_NUMBA:
            t_nb, g_nb = timeit(knb.poly_gcd, a, b, P)
            assert np.array_equal(g_np, g_nb), "backends disagree"
            line += f" {t_nb * 1e3:9.2f}ms {t_np / t_nb:8.1f}x"
        print(line)


def bench_formula_vs_oracle():
    from circrank import backend
    from circrank.circulant import DoubleCirculantSpec, build_double_circulant
    from circrank.field import PrimeField
    from circrank.poly import Poly
    from circrank.rank import double_rank_components, gaussian_rank

    rng = random.Random(4242)
    F = PrimeField(P)
    n = 256
    g = Poly.from_ints(F, [rng.randrange(P) for _ in range(n)])
    gp = Poly.from_ints(F, [rng.randrange(P) for _ in range(n)])
    spec = DoubleCirculantSpec(g, n, gp, n, 512)
    matrix = build_double_circulant(spec)

    def formula():
        comp = double_rank_components(g, n, gp, n)
        return min(512, 2 * n - comp.d)

    t_f, r_f = timeit(formula)
    t_o, r_o = timeit(gaussian_rank, matrix)
    assert r_f == r_o
    print(f"\nclosed-form rank vs elimination oracle (512x512, backend={backend.BACKEND})")
    print(f"  formula:     {t_f * 1e3:9.2f}ms   rank {r_f}")
    print(f"  elimination: {t_o * 1e3:9.2f}ms   rank {r_o}")
    print(f"  speedup:     {t_o / t_f:9.1f}x")


def main():
    if HAVE_NUMBA:
        # compile outside the timed region
        knb.rank_mod_p(np.ones((2, 2), dtype=np.int64), 5)
        knb.poly_gcd(np.array([1, 1], dtype=np.int64), np.array([1], dtype=np.int64), 5)
    else:
        print("numba unavailable; timing the numpy fallback only\n")
    rng = np.random.default_rng(4242)
    bench_rank(rng)
    bench_gcd(rng)
    bench_formula_vs_oracle()


if __name__ == "__main__":
    main()
