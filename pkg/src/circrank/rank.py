"""Closed-form ranks of circulant-type matrices, cross-checked by exact
Gaussian elimination.

The formulas only touch polynomial gcd/lcm degrees and never build the
matrix:

  - single block:   rank = min(m, n - deg gcd(g, X^n - 1))
  - double block:   rank = min(m, n + n' - d) where d is the degree of
        gcd(g, X^n-1) * gcd(g', X^n'-1) * (X^l - 1) / gcd(g g', X^l - 1)
    with l = gcd(n, n'); d splits as e + e' + ebar (the two block gcd
    degrees plus the count of shared l-th roots of unity killing neither
    block).
  - k blocks:       rank = min(m, s) with s the degree of the lcm of the
        quotients (X^ni - 1) / gcd(gi, X^ni - 1).

The elimination oracle is deterministic (first nonzero pivot per column)
and runs on the fast backend for prime fields; RankReport carries both
answers plus the formula's intermediate degrees.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from . import backend
from .circulant import (
    CirculantSpec,
    DenseMatrix,
    DoubleCirculantSpec,
    MultiCirculantSpec,
    build_double_circulant,
    build_generalized_circulant,
    build_multiple_circulant,
)
from .errors import InternalCheckError, NotSquareError
from .poly import Poly, gcd, lcm, x_pow_minus_one


def gaussian_rank(matrix: DenseMatrix) -> int:
    """Exact rank by row reduction over the matrix's field."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    if matrix.ctx.is_prime_field:
        return int(backend.rank_mod_p(matrix.data, matrix.ctx.char))
    return _rank_raw_rows(matrix.ctx, matrix._raw_rows())


def _rank_raw_rows(ctx, rows) -> int:
    """Generic elimination on raw representations (extension fields)."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    zero = ctx.zero_raw
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if rows[r][col] != zero), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = ctx.inv(rows[rank][col])
        rows[rank] = [ctx.mul(v, inv) for v in rows[rank]]
        for r in range(rank + 1, nrows):
            f = rows[r][col]
            if f != zero:
                rows[r] = [ctx.sub(v, ctx.mul(f, w)) for v, w in zip(rows[r], rows[rank])]
        rank += 1
    return rank


@dataclass(frozen=True)
class DoubleRankComponents:
    e: int
    e_prime: int
    e_bar: int
    d: int
    ell: int


def double_rank_components(g: Poly, n: int, g_prime: Poly, n_prime: int) -> DoubleRankComponents:
    """The degrees (e, e', ebar, d) and l behind the double-block formula.

    The division producing d is exact for every input, including zero
    polynomials (gcd(0, h) = monic h makes the degenerate cases land on the
    zero-matrix answer); exactness is asserted."""
    import math

    ctx = g.ctx
    ell = math.gcd(n, n_prime)
    xn = x_pow_minus_one(n, ctx)
    xn_p = x_pow_minus_one(n_prime, ctx)
    xl = x_pow_minus_one(ell, ctx)
    gcd_g = gcd(g, xn)
    gcd_gp = gcd(g_prime, xn_p)
    shared = gcd(g * g_prime, xl)
    quo, rem = divmod(gcd_g * gcd_gp * xl, shared)
    if not rem.is_zero():
        raise InternalCheckError("rank-degree division left a remainder")
    e, e_p = gcd_g.degree, gcd_gp.degree
    e_bar = ell - shared.degree
    d = quo.degree
    if d != e + e_p + e_bar:
        raise InternalCheckError("d != e + e' + ebar")
    return DoubleRankComponents(e=e, e_prime=e_p, e_bar=e_bar, d=d, ell=ell)


@dataclass
class RankReport:
    """Formula rank, oracle rank, and the degrees the formula went through."""

    family: str
    formula_rank: int
    oracle_rank: Optional[int] = None
    agrees: Optional[bool] = None
    d: Optional[int] = None
    e: Optional[int] = None
    e_prime: Optional[int] = None
    e_bar: Optional[int] = None
    ell: Optional[int] = None
    s: Optional[int] = None
    formula_seconds: Optional[float] = None
    oracle_seconds: Optional[float] = None

    def to_json_dict(self, *, timings: bool = False) -> dict:
        out = {
            "family": self.family,
            "formula_rank": self.formula_rank,
            "oracle_rank": self.oracle_rank,
            "e": self.e,
            "ePrime": self.e_prime,
            "eBar": self.e_bar,
            "d": self.d,
            "ell": self.ell,
            "agrees": self.agrees,
        }
        if self.family == "multiple":
            out["s"] = self.s
        if timings:
            out["timings"] = {
                "formulaSeconds": self.formula_seconds,
                "oracleSeconds": self.oracle_seconds,
            }
        return out


def _with_oracle(report: RankReport, build, with_oracle: bool) -> RankReport:
    if with_oracle:
        t0 = time.perf_counter()
        matrix = build()
        report.oracle_rank = gaussian_rank(matrix)
        report.oracle_seconds = time.perf_counter() - t0
        report.agrees = report.oracle_rank == report.formula_rank
    return report


def rank_circulant(spec: CirculantSpec, *, with_oracle: bool = True) -> RankReport:
    t0 = time.perf_counter()
    d = gcd(spec.g, x_pow_minus_one(spec.n, spec.ctx)).degree
    r = min(spec.m, spec.n - d)
    dt = time.perf_counter() - t0
    report = RankReport(family="circulant", formula_rank=r, d=d, formula_seconds=dt)
    return _with_oracle(report, lambda: build_generalized_circulant(spec), with_oracle)


def rank_double(spec: DoubleCirculantSpec, *, with_oracle: bool = True) -> RankReport:
    t0 = time.perf_counter()
    comp = double_rank_components(spec.g, spec.n, spec.g_prime, spec.n_prime)
    r = min(spec.m, spec.n + spec.n_prime - comp.d)
    dt = time.perf_counter() - t0
    report = RankReport(
        family="double",
        formula_rank=r,
        d=comp.d,
        e=comp.e,
        e_prime=comp.e_prime,
        e_bar=comp.e_bar,
        ell=comp.ell,
        formula_seconds=dt,
    )
    return _with_oracle(report, lambda: build_double_circulant(spec), with_oracle)


def rank_multiple(spec: MultiCirculantSpec, *, with_oracle: bool = True) -> RankReport:
    t0 = time.perf_counter()
    quotients = []
    for g, n in spec.blocks:
        xn = x_pow_minus_one(n, spec.ctx)
        quotients.append(xn // gcd(g, xn))
    s = lcm(*quotients).degree if len(quotients) > 1 else quotients[0].monic().degree
    if len(spec.blocks) == 2:
        (g1, n1), (g2, n2) = spec.blocks
        comp = double_rank_components(g1, n1, g2, n2)
        if s != n1 + n2 - comp.d:
            raise InternalCheckError("lcm degree disagrees with the two-block degrees")
    r = min(spec.m, s)
    dt = time.perf_counter() - t0
    report = RankReport(family="multiple", formula_rank=r, s=s, formula_seconds=dt)
    return _with_oracle(report, lambda: build_multiple_circulant(spec), with_oracle)


def consecutive_rows_independent(matrix: DenseMatrix, start: int, count: int) -> bool:
    """True iff rows start..start+count-1 have rank equal to count."""
    if start < 0 or count < 0 or start + count > matrix.rows:
        raise IndexError(
            f"rows [{start}, {start + count}) outside a {matrix.rows}-row matrix"
        )
    if count == 0:
        return True
    return gaussian_rank(matrix.window(start, count)) == count


def assert_not_full_rank(spec: DoubleCirculantSpec) -> bool:
    """For the square case m = n + n': report oracle_rank < n + n' (always
    true, because the rank deficiency d is at least gcd(n, n') >= 1)."""
    total = spec.n + spec.n_prime
    if spec.m != total:
        raise NotSquareError(f"m = {spec.m} but n + n' = {total}")
    comp = double_rank_components(spec.g, spec.n, spec.g_prime, spec.n_prime)
    if not (comp.d >= comp.ell >= 1):
        raise InternalCheckError("rank deficiency below gcd(n, n')")
    return gaussian_rank(build_double_circulant(spec)) < total
