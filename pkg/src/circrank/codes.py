"""Generator matrices for the three circulant code families.

  - cyclic:            first r rows of M(g) with m = n, r = n - deg gcd(g, X^n - 1)
  - quasi-cyclic 1 1/2: n even, blocks of length n and n/2, m = n rows,
                        r = n - deg(gcd(g, X^(n/2) + 1) * gcd(g, g', X^(n/2) - 1))
  - double cyclic:      blocks of length n and n', m = lcm(n, n') rows,
                        r = n + n' - d from the double-block rank degrees

Every construction can verify itself: the emitted rows must have rank r and
stacking them onto the full shift-generated matrix must not raise its rank
(row-space equality).  codeword_membership maps a message polynomial f to
the word (f g mod X^n - 1, f g' mod X^n' - 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .circulant import (
    CirculantSpec,
    DenseMatrix,
    DoubleCirculantSpec,
    _validate_block,
    build_double_circulant,
    build_generalized_circulant,
)
from .errors import (
    InternalCheckError,
    MixedFieldError,
    OddLengthError,
    ZeroGeneratorError,
)
from .field import FieldElem
from .poly import Poly, gcd, x_pow_minus_one, x_pow_plus_one
from .rank import double_rank_components, gaussian_rank


@dataclass(frozen=True)
class CyclicCodeSpec:
    g: Poly
    n: int

    def __post_init__(self):
        _validate_block(self.g, self.n)

    @property
    def ctx(self):
        return self.g.ctx


@dataclass(frozen=True)
class QC15Spec:
    """Index-1½ quasi-cyclic data: deg g < n, deg g' < n/2, n even."""

    g: Poly
    n: int
    g_prime: Poly

    def __post_init__(self):
        if self.n % 2 != 0:
            raise OddLengthError(f"block length {self.n} must be even")
        _validate_block(self.g, self.n, "g")
        _validate_block(self.g_prime, self.n // 2, "g'")
        if self.g_prime.ctx != self.g.ctx:
            raise MixedFieldError("g and g' live over different fields")

    @property
    def ctx(self):
        return self.g.ctx

    @property
    def n_prime(self) -> int:
        return self.n // 2


@dataclass(frozen=True)
class DoubleCyclicSpec:
    g: Poly
    n: int
    g_prime: Poly
    n_prime: int

    def __post_init__(self):
        _validate_block(self.g, self.n, "g")
        _validate_block(self.g_prime, self.n_prime, "g'")
        if self.g_prime.ctx != self.g.ctx:
            raise MixedFieldError("g and g' live over different fields")

    @property
    def ctx(self):
        return self.g.ctx


@dataclass(frozen=True)
class GeneratorMatrix:
    matrix: DenseMatrix
    dimension: int
    code_length: int


def _finish(full: DenseMatrix, r: int, check: bool) -> GeneratorMatrix:
    gen = full.take_rows(r)
    if check:
        if gaussian_rank(gen) != r:
            raise InternalCheckError("generator rows are linearly dependent")
        if gaussian_rank(full.vstack(gen)) != gaussian_rank(full):
            raise InternalCheckError("generator rows span less than the full row space")
    return GeneratorMatrix(matrix=gen, dimension=r, code_length=full.cols)


def cyclic_generator(spec: CyclicCodeSpec, *, check: bool = True) -> GeneratorMatrix:
    """First r rows of the n x n circulant of g; when g divides X^n - 1 this
    is the banded staircase with g's coefficients on each row."""
    if spec.g.is_zero():
        raise ZeroGeneratorError("cyclic code needs a nonzero generator")
    r = spec.n - gcd(spec.g, x_pow_minus_one(spec.n, spec.ctx)).degree
    full = build_generalized_circulant(CirculantSpec(spec.g, spec.n, spec.n))
    return _finish(full, r, check)


def qc15_dimension(spec: QC15Spec) -> int:
    """Code dimension straight from the index-1½ expression:
    n - deg(gcd(g, X^(n/2) + 1) * gcd(g, g', X^(n/2) - 1))."""
    ctx = spec.ctx
    half = spec.n // 2
    killed = gcd(spec.g, x_pow_plus_one(half, ctx)) * gcd(
        spec.g, spec.g_prime, x_pow_minus_one(half, ctx)
    )
    return spec.n - killed.degree


def qc15_generator(spec: QC15Spec, *, check: bool = True) -> GeneratorMatrix:
    if spec.g.is_zero() and spec.g_prime.is_zero():
        raise ZeroGeneratorError("quasi-cyclic code needs a nonzero generator pair")
    half = spec.n // 2
    r = qc15_dimension(spec)
    # the same dimension must fall out of the double-block degrees
    comp = double_rank_components(spec.g, spec.n, spec.g_prime, half)
    if r != spec.n + half - comp.d:
        raise InternalCheckError("index-1½ dimension disagrees with the block degrees")
    full = build_double_circulant(
        DoubleCirculantSpec(spec.g, spec.n, spec.g_prime, half, spec.n)
    )
    return _finish(full, r, check)


def double_cyclic_generator(spec: DoubleCyclicSpec, *, check: bool = True) -> GeneratorMatrix:
    if spec.g.is_zero() and spec.g_prime.is_zero():
        raise ZeroGeneratorError("double cyclic code needs a nonzero generator pair")
    comp = double_rank_components(spec.g, spec.n, spec.g_prime, spec.n_prime)
    r = spec.n + spec.n_prime - comp.d
    m = math.lcm(spec.n, spec.n_prime)
    full = build_double_circulant(
        DoubleCirculantSpec(spec.g, spec.n, spec.g_prime, spec.n_prime, m)
    )
    return _finish(full, r, check)


def codeword_membership(spec, f: Poly) -> tuple[FieldElem, ...]:
    """The word of the message polynomial f: both blocks of (f g, f g')
    reduced modulo their X^len - 1, concatenated g-block first."""
    if not isinstance(spec, (QC15Spec, DoubleCyclicSpec)):
        raise TypeError("expected a QC15Spec or DoubleCyclicSpec")
    ctx = spec.ctx
    if f.ctx != ctx:
        raise MixedFieldError("message polynomial over the wrong field")
    n, n_p = spec.n, spec.n_prime
    left = (f * spec.g) % x_pow_minus_one(n, ctx)
    right = (f * spec.g_prime) % x_pow_minus_one(n_p, ctx)
    raws = left.padded_raw(n) + right.padded_raw(n_p)
    return tuple(FieldElem(ctx, r) for r in raws)


def word_in_row_space(matrix: DenseMatrix, word) -> bool:
    """Oracle check: appending the word as an extra row keeps the rank."""
    extra = DenseMatrix.from_rows(matrix.ctx, [word])
    return gaussian_rank(matrix.vstack(extra)) == gaussian_rank(matrix)


def minimum_distance(gen: GeneratorMatrix, *, max_words: int = 10**6) -> int:
    """Brute-force minimum weight over all q^r codewords (prime fields use
    chunked numpy enumeration; refuse anything past max_words)."""
    ctx = gen.matrix.ctx
    q, r = ctx.order, gen.dimension
    if r == 0:
        raise ValueError("the zero code has no minimum distance")
    total = q**r
    if total > max_words:
        raise ValueError(f"{total} codewords exceed the {max_words} budget")
    if ctx.is_prime_field:
        G = gen.matrix.data
        best = gen.code_length + 1
        chunk = 1 << 14
        for lo in range(0, total, chunk):
            idx = np.arange(lo, min(lo + chunk, total))
            msgs = np.stack(np.unravel_index(idx, (q,) * r), axis=1)
            words = (msgs @ G) % q
            weights = np.count_nonzero(words, axis=1)
            nonzero = weights[np.any(msgs, axis=1)]
            if nonzero.size:
                best = min(best, int(nonzero.min()))
        return best
    import itertools

    rows = gen.matrix._raw_rows()
    best = gen.code_length + 1
    zero = ctx.zero_raw
    for msg in itertools.product([e.raw for e in ctx.elements()], repeat=r):
        if all(c == zero for c in msg):
            continue
        word = [zero] * gen.code_length
        for c, row in zip(msg, rows):
            if c != zero:
                word = [ctx.add(w, ctx.mul(c, v)) for w, v in zip(word, row)]
        best = min(best, sum(1 for w in word if w != zero))
    return best
