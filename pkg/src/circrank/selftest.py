"""Bundled verification sweeps.

Each sweep replays one family of library invariants over many instances
and reports how many checks ran, how many failed, and a reproducible spec
document for every failure.  `small` keeps everything sampled and fast;
`full` runs the exhaustive GF(3) rank sweep and the larger random suites.
"""

from __future__ import annotations

import itertools
import json
import math
import random
import sys
import time
from dataclasses import dataclass, field as dc_field

from .circulant import (
    CirculantSpec,
    DoubleCirculantSpec,
    build_double_circulant,
    build_generalized_circulant,
)
from .codes import (
    CyclicCodeSpec,
    DoubleCyclicSpec,
    QC15Spec,
    codeword_membership,
    cyclic_generator,
    double_cyclic_generator,
    qc15_dimension,
)
from .errors import CircrankError
from .field import PrimeField
from .poly import Poly, gcd, lcm, x_pow_minus_one
from .rank import (
    consecutive_rows_independent,
    double_rank_components,
    gaussian_rank,
)
from .spectra import (
    kernel_basis,
    kernel_dimension_oracle,
    verify_diagonalization,
    verify_double_eigen_identity,
    verify_eigen_identity,
)


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failed: int = 0
    seconds: float = 0.0
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, passed: bool, spec_doc: dict) -> None:
        self.checked += 1
        if not passed:
            self.failed += 1
            if len(self.failures) < 10:
                self.failures.append(spec_doc)


def _double_doc(p: int, n: int, n_p: int, g: Poly, gp: Poly, m: int) -> dict:
    return {
        "family": "double",
        "p": p,
        "n": n,
        "nPrime": n_p,
        "g": g.to_json(),
        "gPrime": gp.to_json(),
        "m": m,
    }


def _rand_poly(rng: random.Random, ctx, n: int, zero_rate: float = 0.06) -> Poly:
    if rng.random() < zero_rate:
        return Poly.zero(ctx)
    return Poly.from_ints(ctx, [rng.randrange(ctx.order) for _ in range(n)])


def _valid_lengths(p: int, candidates) -> list[int]:
    return [n for n in candidates if n % p != 0]


# ---------------------------------------------------------------------------
# polynomial identity sweep
# ---------------------------------------------------------------------------

def sweep_poly_identities(instances: int = 1000, seed: int = 7) -> SweepResult:
    """Three exact monic-polynomial identities on random (g, g', n, n'):

    1. gcd(X^n - 1, X^n' - 1) = X^gcd(n, n') - 1
    2. gcd(g, X^n-1) gcd(g', X^n'-1) / gcd(g g', X^l-1)
         = gcd(g, (X^n-1)/(X^l-1)) gcd(g', (X^n'-1)/(X^l-1)) gcd(g, g', X^l-1)
    3. lcm of the two quotients (X^len - 1)/gcd(...) equals the closed form
       (X^n-1)(X^n'-1)/(gcd gcd) * gcd(g g', X^l-1)/(X^l-1)
    """
    rng = random.Random(seed)
    res = SweepResult("poly-identities")
    t0 = time.perf_counter()
    for _ in range(instances):
        p = rng.choice((3, 5, 7))
        ctx = PrimeField(p)
        lengths = _valid_lengths(p, range(1, 13))
        n, n_p = rng.choice(lengths), rng.choice(lengths)
        ell = math.gcd(n, n_p)
        g = _rand_poly(rng, ctx, n)
        gp = _rand_poly(rng, ctx, n_p)
        if g.is_zero() and gp.is_zero():
            gp = Poly.one(ctx)
        xn, xn_p, xl = (x_pow_minus_one(k, ctx) for k in (n, n_p, ell))
        doc = _double_doc(p, n, n_p, g, gp, 1)

        ok = gcd(xn, xn_p) == x_pow_minus_one(ell, ctx).monic()
        res.record(ok, doc)

        gcd_g, gcd_gp = gcd(g, xn), gcd(gp, xn_p)
        shared = gcd(g * gp, xl)
        lhs, rem = divmod(gcd_g * gcd_gp, shared)
        rhs = (
            gcd(g, xn // xl)
            * gcd(gp, xn_p // xl)
            * gcd(g, gp, xl)
        ).monic()
        res.record(rem.is_zero() and lhs.monic() == rhs, doc)

        q1, q2 = xn // gcd_g, xn_p // gcd_gp
        closed, rem2 = divmod((xn * xn_p) // (gcd_g * gcd_gp) * shared, xl)
        ok = rem2.is_zero() and lcm(q1, q2) == closed.monic()
        res.record(ok, doc)
    res.seconds = time.perf_counter() - t0
    return res


# ---------------------------------------------------------------------------
# rank formula vs elimination oracle
# ---------------------------------------------------------------------------

def _check_rank_pair(res: SweepResult, p: int, n: int, n_p: int, g: Poly, gp: Poly,
                     m_values, windows: bool) -> None:
    comp = double_rank_components(g, n, gp, n_p)
    r_max = n + n_p - comp.d
    m_top = max(m_values)
    top = build_double_circulant(DoubleCirculantSpec(g, n, gp, n_p, m_top))
    for m in m_values:
        r = min(m, r_max)
        ok = gaussian_rank(top.window(0, m)) == r
        res.record(ok, _double_doc(p, n, n_p, g, gp, m))
    if windows and r_max > 0:
        doc = _double_doc(p, n, n_p, g, gp, m_top)
        for start in range(0, m_top - r_max + 1):
            res.record(consecutive_rows_independent(top, start, r_max), doc)
        # wrap-around starts: rows repeat with period lcm(n, n'), so a matrix
        # with lcm + r_max rows exposes every distinct window without wrapping
        period = math.lcm(n, n_p)
        tall = build_double_circulant(DoubleCirculantSpec(g, n, gp, n_p, period + r_max))
        for start in range(period):
            res.record(consecutive_rows_independent(tall, start, r_max), doc)


def sweep_rank_gf3(exhaustive: bool = True, sample: int = 400, seed: int = 11) -> SweepResult:
    """Formula rank == elimination rank for GF(3) block lengths {2, 4} over
    all (g, g') pairs and m in 1..8, plus every consecutive-row window."""
    res = SweepResult("rank-oracle-gf3" + ("" if exhaustive else "-sampled"))
    t0 = time.perf_counter()
    ctx = PrimeField(3)
    rng = random.Random(seed)
    for n, n_p in itertools.product((2, 4), repeat=2):
        pairs = itertools.product(
            itertools.product(range(3), repeat=n),
            itertools.product(range(3), repeat=n_p),
        )
        if not exhaustive:
            everything = list(pairs)
            pairs = rng.sample(everything, min(sample, len(everything)))
        for g_ints, gp_ints in pairs:
            g = Poly.from_ints(ctx, list(g_ints))
            gp = Poly.from_ints(ctx, list(gp_ints))
            _check_rank_pair(res, 3, n, n_p, g, gp, range(1, 9), windows=True)
    res.seconds = time.perf_counter() - t0
    return res


def sweep_rank_gf5(count: int = 500, seed: int = 13) -> SweepResult:
    """Random GF(5) specs with block lengths in {1, 2, 3, 4, 6}."""
    rng = random.Random(seed)
    res = SweepResult("rank-oracle-gf5")
    t0 = time.perf_counter()
    ctx = PrimeField(5)
    lengths = (1, 2, 3, 4, 6)
    for _ in range(count):
        n, n_p = rng.choice(lengths), rng.choice(lengths)
        g = _rand_poly(rng, ctx, n)
        gp = _rand_poly(rng, ctx, n_p)
        m = rng.randrange(1, n + n_p + 3)
        _check_rank_pair(res, 5, n, n_p, g, gp, [m], windows=True)
    res.seconds = time.perf_counter() - t0
    return res


def sweep_rank_gf2(exhaustive: bool = True, sample: int = 1500, seed: int = 17) -> SweepResult:
    """GF(2) with odd block lengths in {1, 3, 5, 7}; all pairs when exhaustive."""
    rng = random.Random(seed)
    res = SweepResult("rank-oracle-gf2")
    t0 = time.perf_counter()
    ctx = PrimeField(2)
    for n, n_p in itertools.product((1, 3, 5, 7), repeat=2):
        pairs = itertools.product(
            itertools.product(range(2), repeat=n),
            itertools.product(range(2), repeat=n_p),
        )
        if not exhaustive:
            everything = list(pairs)
            pairs = rng.sample(everything, min(sample // 16 + 1, len(everything)))
        for g_ints, gp_ints in pairs:
            g = Poly.from_ints(ctx, list(g_ints))
            gp = Poly.from_ints(ctx, list(gp_ints))
            _check_rank_pair(res, 2, n, n_p, g, gp, [1, max(1, (n + n_p) // 2), n + n_p], windows=False)
    res.seconds = time.perf_counter() - t0
    return res


def sweep_square_deficiency(count: int = 200, seed: int = 19) -> SweepResult:
    """Square double circulants are never full rank; nullity equals d."""
    rng = random.Random(seed)
    res = SweepResult("square-rank-deficiency")
    t0 = time.perf_counter()
    for _ in range(count):
        p = rng.choice((3, 5, 7))
        ctx = PrimeField(p)
        lengths = _valid_lengths(p, range(1, 7))
        n, n_p = rng.choice(lengths), rng.choice(lengths)
        g = _rand_poly(rng, ctx, n)
        gp = _rand_poly(rng, ctx, n_p)
        spec = DoubleCirculantSpec(g, n, gp, n_p, n + n_p)
        comp = double_rank_components(g, n, gp, n_p)
        doc = _double_doc(p, n, n_p, g, gp, n + n_p)
        rank = gaussian_rank(build_double_circulant(spec))
        res.record(rank < n + n_p and comp.d >= comp.ell >= 1, doc)
        res.record(kernel_dimension_oracle(spec) == comp.d, doc)
    res.seconds = time.perf_counter() - t0
    return res


# ---------------------------------------------------------------------------
# code constructions
# ---------------------------------------------------------------------------

def sweep_qc15_agreement(fields=(3, 5), max_n: int = 8, sample: int = 250, seed: int = 23) -> SweepResult:
    """The index-1½ dimension expression must equal the two-block rank
    n + n/2 - d for every even n; exhaustive over small cells, sampled above."""
    rng = random.Random(seed)
    res = SweepResult("qc15-dimension-agreement")
    t0 = time.perf_counter()
    for p in fields:
        ctx = PrimeField(p)
        for n in range(2, max_n + 1, 2):
            if n % p == 0 or (n // 2) % p == 0:
                continue
            half = n // 2
            total = p ** (n + half)
            if total <= 1000:
                pairs = itertools.product(
                    itertools.product(range(p), repeat=n),
                    itertools.product(range(p), repeat=half),
                )
            else:
                pairs = (
                    (
                        tuple(rng.randrange(p) for _ in range(n)),
                        tuple(rng.randrange(p) for _ in range(half)),
                    )
                    for _ in range(sample)
                )
            for g_ints, gp_ints in pairs:
                g = Poly.from_ints(ctx, list(g_ints))
                gp = Poly.from_ints(ctx, list(gp_ints))
                if g.is_zero() and gp.is_zero():
                    continue
                spec = QC15Spec(g, n, gp)
                comp = double_rank_components(g, n, gp, half)
                doc = {"family": "qc15", "p": p, "n": n, "g": g.to_json(), "gPrime": gp.to_json()}
                res.record(qc15_dimension(spec) == n + half - comp.d, doc)
    res.seconds = time.perf_counter() - t0
    return res


def sweep_codes(count: int = 60, seed: int = 29) -> SweepResult:
    """Generator matrices: oracle-checked construction, brute-force codeword
    counts, and membership linearity/shift structure."""
    rng = random.Random(seed)
    res = SweepResult("code-generators")
    t0 = time.perf_counter()
    for _ in range(count):
        p = rng.choice((2, 3, 5))
        ctx = PrimeField(p)
        lengths = _valid_lengths(p, range(1, 8))

        # cyclic: construction validates itself; codeword count is p^r
        n = rng.choice(lengths)
        g = _rand_poly(rng, ctx, n, zero_rate=0.0)
        while g.is_zero():
            g = _rand_poly(rng, ctx, n, zero_rate=0.0)
        doc = {"family": "cyclic", "p": p, "n": n, "g": g.to_json()}
        try:
            gen = cyclic_generator(CyclicCodeSpec(g, n))
            full = build_generalized_circulant(CirculantSpec(g, n, n))
            words = {
                tuple(e.raw for e in codeword_membership_cyclic(g, n, f_ints, ctx))
                for f_ints in itertools.product(range(p), repeat=n)
            } if p ** n <= 2500 else None
            ok = words is None or len(words) == p ** gen.dimension
            res.record(ok and gaussian_rank(full) == gen.dimension, doc)
        except CircrankError:
            res.record(False, doc)

        # double cyclic: membership is linear and X shifts both blocks
        n, n_p = rng.choice(lengths), rng.choice(lengths)
        g = _rand_poly(rng, ctx, n)
        gp = _rand_poly(rng, ctx, n_p)
        if g.is_zero() and gp.is_zero():
            g = Poly.one(ctx)
        spec = DoubleCyclicSpec(g, n, gp, n_p)
        doc = {"family": "doubleCyclic", "p": p, "n": n, "nPrime": n_p,
               "g": g.to_json(), "gPrime": gp.to_json()}
        try:
            double_cyclic_generator(spec)
            f1 = _rand_poly(rng, ctx, n + n_p, zero_rate=0.0)
            f2 = _rand_poly(rng, ctx, n + n_p, zero_rate=0.0)
            w1 = codeword_membership(spec, f1)
            w2 = codeword_membership(spec, f2)
            w12 = codeword_membership(spec, f1 + f2)
            ok = all(a + b == c for a, b, c in zip(w1, w2, w12))
            shifted = codeword_membership(spec, f1 * Poly.from_ints(ctx, [0, 1]))
            expect = _shift_blocks(w1, n, n_p)
            res.record(ok and list(shifted) == expect, doc)
        except CircrankError:
            res.record(False, doc)
    res.seconds = time.perf_counter() - t0
    return res


def codeword_membership_cyclic(g: Poly, n: int, f_ints, ctx):
    f = Poly.from_ints(ctx, list(f_ints))
    word = (f * g) % x_pow_minus_one(n, ctx)
    return tuple(word.coeff(i) for i in range(n))


def _shift_blocks(word, n: int, n_p: int) -> list:
    left, right = list(word[:n]), list(word[n:])
    return [left[-1]] + left[:-1] + [right[-1]] + right[:-1]


# ---------------------------------------------------------------------------
# spectral sweep
# ---------------------------------------------------------------------------

def sweep_spectra(fields=(3, 5, 7), max_n: int = 6, pairs_per_cell: int = 2, seed: int = 31) -> SweepResult:
    """Eigen-identities, diagonalizations, and kernel bases on every valid
    (n, n') cell with lengths up to max_n."""
    rng = random.Random(seed)
    res = SweepResult("spectra")
    t0 = time.perf_counter()
    for p in fields:
        ctx = PrimeField(p)
        lengths = _valid_lengths(p, range(1, max_n + 1))
        for n in lengths:
            for m in (1, n, n + 2):
                for g in _poly_samples(rng, ctx, n, pairs_per_cell):
                    spec = CirculantSpec(g, n, m)
                    doc = {"family": "circulant", "p": p, "n": n, "g": g.to_json(), "m": m}
                    res.record(verify_eigen_identity(spec), doc)
                    res.record(verify_diagonalization(spec), doc)
        for n, n_p in itertools.product(lengths, repeat=2):
            for g, gp in zip(
                _poly_samples(rng, ctx, n, pairs_per_cell + 1),
                _poly_samples(rng, ctx, n_p, pairs_per_cell + 1),
            ):
                m = n + n_p
                spec = DoubleCirculantSpec(g, n, gp, n_p, m)
                doc = _double_doc(p, n, n_p, g, gp, m)
                res.record(verify_double_eigen_identity(spec), doc)
                res.record(verify_diagonalization(spec), doc)
                try:
                    basis = kernel_basis(spec)
                    ok = basis.d == len(basis.vectors)
                    ok = ok and kernel_dimension_oracle(spec) == basis.d
                except CircrankError:
                    ok = False
                res.record(ok, doc)
    res.seconds = time.perf_counter() - t0
    return res


def _poly_samples(rng: random.Random, ctx, n: int, count: int) -> list[Poly]:
    out = [Poly.zero(ctx), Poly.one(ctx)]
    while len(out) < count + 2:
        out.append(_rand_poly(rng, ctx, n, zero_rate=0.0))
    return out[: count + 2]


# ---------------------------------------------------------------------------
# runner
# ---------------------------------------------------------------------------

def run_selftest(scale: str = "small", stream=None) -> int:
    stream = stream or sys.stdout
    if scale == "full":
        sweeps = [
            sweep_poly_identities(1000),
            sweep_rank_gf3(exhaustive=True),
            sweep_rank_gf5(500),
            sweep_rank_gf2(exhaustive=True),
            sweep_square_deficiency(200),
            sweep_qc15_agreement(sample=250),
            sweep_codes(60),
            sweep_spectra(pairs_per_cell=2),
        ]
    elif scale == "small":
        sweeps = [
            sweep_poly_identities(150),
            sweep_rank_gf3(exhaustive=False, sample=120),
            sweep_rank_gf5(120),
            sweep_rank_gf2(exhaustive=False),
            sweep_square_deficiency(60),
            sweep_qc15_agreement(sample=60),
            sweep_codes(25),
            sweep_spectra(fields=(3, 5), max_n=5, pairs_per_cell=1),
        ]
    else:
        raise ValueError(f"unknown scale {scale!r}")

    all_ok = True
    for res in sweeps:
        status = "PASS" if res.ok else "FAIL"
        all_ok = all_ok and res.ok
        print(f"{status} {res.name}: {res.checked} checks, {res.failed} failed, "
              f"{res.seconds:.2f}s", file=stream)
        for doc in res.failures:
            print(f"  offending spec: {json.dumps(doc, sort_keys=True)}", file=stream)
    return 0 if all_ok else 1
