"""Circulant-type matrix builders and the dense exact matrix container.

A generalized circulant M(g) of shape m x n has row i equal to the i-fold
circular right shift of g's coefficient vector (rows counted from 0; row n
equals row 0 again when m > n).  Double and multiple circulants are
side-by-side concatenations of such blocks sharing the row count m; the
g-block always comes first.

DenseMatrix stores residues in an immutable int64 array: shape (rows, cols)
over a prime field, (rows, cols, k) over GF(p^k) with the trailing axis
holding coefficient vectors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import MixedFieldError, NoEmbeddingError, OrderMismatchError, SpecError
from .field import FieldElem
from .poly import Poly

DEFAULT_MAX_ENTRIES = 1_000_000


class DenseMatrix:
    __slots__ = ("ctx", "data")

    def __init__(self, ctx, data):
        arr = np.array(data, dtype=np.int64, copy=True)
        want = 2 if ctx.is_prime_field else 3
        if arr.ndim != want:
            raise ValueError(f"expected {want}-axis residue data for {ctx}")
        if not ctx.is_prime_field and arr.shape[-1] != ctx.degree:
            raise ValueError(f"trailing axis must hold {ctx.degree} coefficients")
        arr %= ctx.char
        arr.setflags(write=False)
        self.ctx = ctx
        self.data = arr

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @classmethod
    def zeros(cls, ctx, rows: int, cols: int) -> "DenseMatrix":
        shape = (rows, cols) if ctx.is_prime_field else (rows, cols, ctx.degree)
        return cls(ctx, np.zeros(shape, dtype=np.int64))

    @classmethod
    def from_rows(cls, ctx, rows) -> "DenseMatrix":
        """Build from nested sequences of FieldElem (or ints)."""
        out = []
        for row in rows:
            out.append([_raw_of(ctx, v) for v in row])
        return cls(ctx, out)

    def entry(self, i: int, j: int) -> FieldElem:
        raw = self.data[i, j]
        return FieldElem(self.ctx, int(raw) if self.ctx.is_prime_field else tuple(int(c) for c in raw))

    def row(self, i: int) -> tuple[FieldElem, ...]:
        return tuple(self.entry(i, j) for j in range(self.cols))

    def window(self, start: int, count: int) -> "DenseMatrix":
        if start < 0 or count < 0 or start + count > self.rows:
            raise IndexError(f"rows [{start}, {start + count}) out of range")
        return DenseMatrix(self.ctx, self.data[start:start + count])

    def take_rows(self, count: int) -> "DenseMatrix":
        return self.window(0, count)

    def vstack(self, other: "DenseMatrix") -> "DenseMatrix":
        self._check(other)
        if other.cols != self.cols:
            raise ValueError("column counts differ")
        return DenseMatrix(self.ctx, np.concatenate([self.data, other.data], axis=0))

    def hstack(self, other: "DenseMatrix") -> "DenseMatrix":
        self._check(other)
        if other.rows != self.rows:
            raise ValueError("row counts differ")
        return DenseMatrix(self.ctx, np.concatenate([self.data, other.data], axis=1))

    def __matmul__(self, other: "DenseMatrix") -> "DenseMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.cols} vs {other.rows}")
        ctx = self.ctx
        p = ctx.char
        # inner-dimension * p^2 must stay inside int64 for the array paths
        fits = self.cols * (p - 1) * (p - 1) < (1 << 62)
        if ctx.is_prime_field and fits:
            return DenseMatrix(ctx, (self.data @ other.data) % p)
        if not ctx.is_prime_field and fits:
            return DenseMatrix(ctx, _ext_matmul(ctx, self.data, other.data))
        rows, cols, inner = self.rows, other.cols, self.cols
        a, b = self._raw_rows(), other._raw_rows()
        out = []
        for i in range(rows):
            line = []
            for j in range(cols):
                acc = ctx.zero_raw
                for t in range(inner):
                    acc = ctx.add(acc, ctx.mul(a[i][t], b[t][j]))
                line.append(acc)
            out.append(line)
        return DenseMatrix(ctx, out)

    def scale_columns(self, values) -> "DenseMatrix":
        """Multiply column j by values[j] (the product with a diagonal matrix)."""
        ctx = self.ctx
        raws = [_raw_of(ctx, v) for v in values]
        if len(raws) != self.cols:
            raise ValueError("need one scale per column")
        if ctx.is_prime_field:
            vec = np.fromiter(raws, dtype=np.int64, count=len(raws))
            return DenseMatrix(ctx, (self.data * vec[None, :]) % ctx.char)
        rows = self._raw_rows()
        out = [[ctx.mul(rows[i][j], raws[j]) for j in range(self.cols)] for i in range(self.rows)]
        return DenseMatrix(ctx, out)

    def embed_into(self, target) -> "DenseMatrix":
        if target == self.ctx:
            return DenseMatrix(target, self.data)
        if self.ctx.is_prime_field and not target.is_prime_field and target.base == self.ctx:
            lifted = np.zeros((self.rows, self.cols, target.degree), dtype=np.int64)
            lifted[:, :, 0] = self.data
            return DenseMatrix(target, lifted)
        raise NoEmbeddingError(f"no embedding of {self.ctx} into {target}")

    def is_zero(self) -> bool:
        return not self.data.any()

    def to_json(self):
        return self.data.tolist()

    def _check(self, other: "DenseMatrix") -> None:
        if not isinstance(other, DenseMatrix):
            raise TypeError(f"expected DenseMatrix, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise MixedFieldError(f"{other.ctx} matrix combined with {self.ctx}")

    def _raw_rows(self):
        if self.ctx.is_prime_field:
            return [[int(v) for v in row] for row in self.data]
        return [[tuple(int(c) for c in v) for v in row] for row in self.data]

    def __eq__(self, other):
        if not isinstance(other, DenseMatrix):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.data.shape == other.data.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self):
        return hash((self.ctx, self.data.shape, self.data.tobytes()))

    def __repr__(self):
        return f"DenseMatrix({self.ctx}, {self.rows}x{self.cols})"


def _ext_matmul(ctx, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product over GF(p^k) on (rows, cols, k) coefficient arrays:
    convolve along the coefficient axis, then fold X^k..X^(2k-2) down
    through the monic modulus."""
    p, k = ctx.char, ctx.degree
    conv = np.einsum("itu,tjv->ijuv", a, b) % p
    rows, cols = conv.shape[:2]
    out = np.zeros((rows, cols, 2 * k - 1), dtype=np.int64)
    for u in range(k):
        out[:, :, u:u + k] += conv[:, :, u, :]
    out %= p
    mod = ctx.mod_coeffs
    for idx in range(2 * k - 2, k - 1, -1):
        top = out[:, :, idx]
        for j in range(k):
            out[:, :, idx - k + j] = (out[:, :, idx - k + j] - top * mod[j]) % p
    return out[:, :, :k]


def _raw_of(ctx, v):
    if isinstance(v, FieldElem):
        if v.ctx != ctx:
            raise MixedFieldError(f"{v.ctx} entry in {ctx} matrix")
        return v.raw
    if isinstance(v, int):
        return ctx.from_int(v)
    raise TypeError(f"matrix entries must be FieldElem or int, got {type(v).__name__}")


def _validate_block(g: Poly, n: int, label: str = "g") -> None:
    if not isinstance(n, int) or n < 1:
        raise SpecError(f"block length for {label} must be a positive integer")
    if g.degree >= n:
        raise SpecError(f"deg {label} = {g.degree} must be below the block length {n}")
    if n % g.ctx.char == 0:
        raise SpecError(f"characteristic {g.ctx.char} divides block length {n}")


@dataclass(frozen=True)
class CirculantSpec:
    """A generalized circulant: polynomial g, block length n, row count m."""

    g: Poly
    n: int
    m: int

    def __post_init__(self):
        _validate_block(self.g, self.n)
        if not isinstance(self.m, int) or self.m < 1:
            raise SpecError("m must be a positive integer")

    @property
    def ctx(self):
        return self.g.ctx


@dataclass(frozen=True)
class DoubleCirculantSpec:
    """Two circulant blocks sharing the row count m, g-block first."""

    g: Poly
    n: int
    g_prime: Poly
    n_prime: int
    m: int

    def __post_init__(self):
        _validate_block(self.g, self.n, "g")
        _validate_block(self.g_prime, self.n_prime, "g'")
        if self.g_prime.ctx != self.g.ctx:
            raise MixedFieldError("g and g' live over different fields")
        if not isinstance(self.m, int) or self.m < 1:
            raise SpecError("m must be a positive integer")

    @property
    def ctx(self):
        return self.g.ctx

    @property
    def ell(self) -> int:
        return math.gcd(self.n, self.n_prime)

    def swapped(self) -> "DoubleCirculantSpec":
        return DoubleCirculantSpec(self.g_prime, self.n_prime, self.g, self.n, self.m)


@dataclass(frozen=True)
class MultiCirculantSpec:
    """An ordered sequence of circulant blocks sharing the row count m."""

    blocks: tuple[tuple[Poly, int], ...]
    m: int

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple((g, int(n)) for g, n in self.blocks))
        if not self.blocks:
            raise SpecError("at least one block is required")
        ctx = self.blocks[0][0].ctx
        for i, (g, n) in enumerate(self.blocks):
            _validate_block(g, n, f"g{i + 1}")
            if g.ctx != ctx:
                raise MixedFieldError("blocks live over different fields")
        if not isinstance(self.m, int) or self.m < 1:
            raise SpecError("m must be a positive integer")

    @property
    def ctx(self):
        return self.blocks[0][0].ctx

    @property
    def total_cols(self) -> int:
        return sum(n for _, n in self.blocks)


def _circulant_data(g: Poly, n: int, m: int) -> np.ndarray:
    ctx = g.ctx
    padded = g.padded_raw(n)
    if ctx.is_prime_field:
        row0 = np.fromiter(padded, dtype=np.int64, count=n)
    else:
        row0 = np.array(padded, dtype=np.int64)
    return np.stack([np.roll(row0, i, axis=0) for i in range(m)])


def _check_entry_budget(m: int, cols: int, max_entries: int) -> None:
    if m * cols > max_entries:
        raise SpecError(f"{m}x{cols} exceeds the {max_entries}-entry budget")


def build_generalized_circulant(spec: CirculantSpec, *, max_entries: int = DEFAULT_MAX_ENTRIES) -> DenseMatrix:
    _check_entry_budget(spec.m, spec.n, max_entries)
    return DenseMatrix(spec.ctx, _circulant_data(spec.g, spec.n, spec.m))


def build_double_circulant(spec: DoubleCirculantSpec, *, max_entries: int = DEFAULT_MAX_ENTRIES) -> DenseMatrix:
    _check_entry_budget(spec.m, spec.n + spec.n_prime, max_entries)
    left = _circulant_data(spec.g, spec.n, spec.m)
    right = _circulant_data(spec.g_prime, spec.n_prime, spec.m)
    return DenseMatrix(spec.ctx, np.concatenate([left, right], axis=1))


def build_multiple_circulant(spec: MultiCirculantSpec, *, max_entries: int = DEFAULT_MAX_ENTRIES) -> DenseMatrix:
    _check_entry_budget(spec.m, spec.total_cols, max_entries)
    parts = [_circulant_data(g, n, spec.m) for g, n in spec.blocks]
    return DenseMatrix(spec.ctx, np.concatenate(parts, axis=1))


def vandermonde_column(zeta: FieldElem, m: int) -> DenseMatrix:
    """The m x 1 column (1, zeta, ..., zeta^(m-1))."""
    if m < 1:
        raise ValueError("m must be >= 1")
    ctx = zeta.ctx
    entries, acc = [], ctx.one_raw
    for _ in range(m):
        entries.append([acc])
        acc = ctx.mul(acc, zeta.raw)
    return DenseMatrix(ctx, entries)


def generalized_fourier(omega: FieldElem, m: int, n: int) -> DenseMatrix:
    """The m x n matrix with column j equal to vandermonde_column(omega^j, m);
    omega must have multiplicative order exactly n."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be >= 1")
    if not omega.has_order(n):
        raise OrderMismatchError(f"{omega!r} does not have order {n}")
    ctx = omega.ctx
    pows, acc = [], ctx.one_raw
    for _ in range(n):
        pows.append(acc)
        acc = ctx.mul(acc, omega.raw)
    data = [[pows[(i * j) % n] for j in range(n)] for i in range(m)]
    return DenseMatrix(ctx, data)


def block_diagonal(mats) -> DenseMatrix:
    """Square block-diagonal assembly of the given matrices."""
    mats = list(mats)
    ctx = mats[0].ctx
    for m in mats[1:]:
        mats[0]._check(m)
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    shape = (rows, cols) if ctx.is_prime_field else (rows, cols, ctx.degree)
    out = np.zeros(shape, dtype=np.int64)
    r = c = 0
    for m in mats:
        out[r:r + m.rows, c:c + m.cols] = m.data
        r += m.rows
        c += m.cols
    return DenseMatrix(ctx, out)
