"""Dense univariate polynomials over a field context.

Coefficients are stored lowest degree first with no trailing zeros; the
zero polynomial has an empty coefficient tuple and degree NEG_INF.  gcd
results are always monic, which makes polynomial equality tests canonical
and leaves the degree-based rank formulas unaffected.

Arithmetic over prime fields routes through the backend kernels once the
operands are large enough for the call overhead to pay off; everything
else uses the exact object-level loops.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from . import backend
from .errors import BothZeroError, MixedFieldError, ZeroOperandError
from .field import FieldElem

NEG_INF = float("-inf")

# below this coefficient count the plain loops beat the kernel-call overhead
_KERNEL_MIN_LEN = 32


class Poly:
    __slots__ = ("ctx", "raw")

    def __init__(self, ctx, raw_coeffs: Iterable, *, trusted: bool = False):
        """raw_coeffs hold raw field representations; use from_ints /
        from_elems unless you already have those."""
        coeffs = list(raw_coeffs)
        if not trusted:
            while coeffs and coeffs[-1] == ctx.zero_raw:
                coeffs.pop()
        self.ctx = ctx
        self.raw = tuple(coeffs)

    @classmethod
    def from_ints(cls, ctx, ints: Sequence[int]) -> "Poly":
        return cls(ctx, (ctx.from_int(v) for v in ints))

    @classmethod
    def from_elems(cls, ctx, elems: Sequence[FieldElem]) -> "Poly":
        raws = []
        for e in elems:
            if e.ctx != ctx:
                raise MixedFieldError(f"{e.ctx} coefficient in {ctx} polynomial")
            raws.append(e.raw)
        return cls(ctx, raws)

    @classmethod
    def zero(cls, ctx) -> "Poly":
        return cls(ctx, (), trusted=True)

    @classmethod
    def one(cls, ctx) -> "Poly":
        return cls(ctx, (ctx.one_raw,), trusted=True)

    @property
    def degree(self):
        return len(self.raw) - 1 if self.raw else NEG_INF

    def is_zero(self) -> bool:
        return not self.raw

    @property
    def coeffs(self) -> tuple[FieldElem, ...]:
        return tuple(FieldElem(self.ctx, r) for r in self.raw)

    def coeff(self, i: int) -> FieldElem:
        raw = self.raw[i] if 0 <= i < len(self.raw) else self.ctx.zero_raw
        return FieldElem(self.ctx, raw)

    def leading(self) -> FieldElem:
        if not self.raw:
            raise ValueError("zero polynomial has no leading coefficient")
        return FieldElem(self.ctx, self.raw[-1])

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.ctx != self.ctx:
            raise MixedFieldError(f"{other.ctx} polynomial used over {self.ctx}")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        ctx = self.ctx
        a, b = self.raw, other.raw
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, r in enumerate(b):
            out[i] = ctx.add(out[i], r)
        return Poly(ctx, out)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        return self + (-other)

    def __neg__(self) -> "Poly":
        ctx = self.ctx
        return Poly(ctx, (ctx.neg(r) for r in self.raw), trusted=True)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        ctx = self.ctx
        a, b = self.raw, other.raw
        if not a or not b:
            return Poly.zero(ctx)
        if ctx.is_prime_field and max(len(a), len(b)) >= _KERNEL_MIN_LEN:
            out = backend.poly_mul(_to_array(a), _to_array(b), ctx.p)
            return Poly(ctx, out.tolist(), trusted=True)
        out = [ctx.zero_raw] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai != ctx.zero_raw:
                for j, bj in enumerate(b):
                    out[i + j] = ctx.add(out[i + j], ctx.mul(ai, bj))
        return Poly(ctx, out)

    def scale(self, c: FieldElem) -> "Poly":
        ctx = self.ctx
        raw = ctx.elem(c).raw
        return Poly(ctx, (ctx.mul(r, raw) for r in self.raw))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        ctx = self.ctx
        a, b = self.raw, other.raw
        if len(a) < len(b):
            return Poly.zero(ctx), self
        if ctx.is_prime_field and len(a) >= _KERNEL_MIN_LEN:
            q, r = backend.poly_divmod(_to_array(a), _to_array(b), ctx.p)
            return Poly(ctx, q.tolist(), trusted=True), Poly(ctx, r.tolist(), trusted=True)
        rem = list(a)
        quo = [ctx.zero_raw] * (len(a) - len(b) + 1)
        inv_lead = ctx.inv(b[-1])
        for shift in range(len(a) - len(b), -1, -1):
            c = ctx.mul(rem[shift + len(b) - 1], inv_lead)
            if c != ctx.zero_raw:
                quo[shift] = c
                for j, bj in enumerate(b):
                    rem[shift + j] = ctx.sub(rem[shift + j], ctx.mul(c, bj))
        return Poly(ctx, quo), Poly(ctx, rem)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        ctx = self.ctx
        inv_lead = ctx.inv(self.raw[-1])
        return Poly(ctx, (ctx.mul(r, inv_lead) for r in self.raw), trusted=True)

    def eval(self, x: FieldElem) -> FieldElem:
        """Horner evaluation at x, embedding the coefficients into x's field
        (identity, or base field into extension)."""
        target = x.ctx
        acc = target.zero_raw
        for c in reversed(self.raw):
            acc = target.add(target.mul(acc, x.raw), target.embed_raw(self.ctx, c))
        return FieldElem(target, acc)

    def padded_raw(self, n: int) -> tuple:
        """Raw coefficients padded with zeros up to length n."""
        if len(self.raw) > n:
            raise ValueError(f"degree {self.degree} does not fit in length {n}")
        return self.raw + (self.ctx.zero_raw,) * (n - len(self.raw))

    def to_json(self):
        if self.ctx.is_prime_field:
            return list(self.raw)
        return [list(r) for r in self.raw]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self.raw == other.raw

    def __hash__(self):
        return hash((self.ctx, self.raw))

    def __repr__(self):
        return f"Poly({self.ctx}, {self})"

    def __str__(self):
        if not self.raw:
            return "0"
        terms = []
        for i, r in enumerate(self.raw):
            if r == self.ctx.zero_raw:
                continue
            c = str(FieldElem(self.ctx, r))
            if i == 0:
                terms.append(c)
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if r == self.ctx.one_raw else f"{c}*{x}")
        return " + ".join(terms)


def x_pow_minus_one(n: int, ctx) -> Poly:
    """The polynomial X^n - 1 over ctx."""
    if n < 1:
        raise ValueError("n must be >= 1")
    raw = [ctx.neg(ctx.one_raw)] + [ctx.zero_raw] * (n - 1) + [ctx.one_raw]
    return Poly(ctx, raw, trusted=True)


def x_pow_plus_one(n: int, ctx) -> Poly:
    """The polynomial X^n + 1 over ctx."""
    if n < 1:
        raise ValueError("n must be >= 1")
    raw = [ctx.one_raw] + [ctx.zero_raw] * (n - 1) + [ctx.one_raw]
    return Poly(ctx, raw, trusted=True)


def _gcd2(a: Poly, b: Poly) -> Poly:
    if a.is_zero() and b.is_zero():
        raise BothZeroError("gcd(0, 0) is undefined")
    ctx = a.ctx
    if ctx.is_prime_field and max(len(a.raw), len(b.raw)) >= _KERNEL_MIN_LEN:
        out = backend.poly_gcd(_to_array(a.raw), _to_array(b.raw), ctx.p)
        return Poly(ctx, out.tolist(), trusted=True)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def gcd(a: Poly, b: Poly, *rest: Poly) -> Poly:
    """Monic greatest common divisor; n-ary calls fold pairwise from the
    left (gcd is associative, so the order is irrelevant)."""
    a._check(b)
    out = _gcd2(a, b)
    for nxt in rest:
        a._check(nxt)
        out = _gcd2(out, nxt)
    return out


def lcm(a: Poly, b: Poly, *rest: Poly) -> Poly:
    """Monic least common multiple of nonzero polynomials."""
    out = a
    for nxt in (b,) + rest:
        out._check(nxt)
        if out.is_zero() or nxt.is_zero():
            raise ZeroOperandError("lcm of the zero polynomial is undefined")
        out = ((out * nxt) // _gcd2(out, nxt)).monic()
    return out


def _to_array(raw: tuple) -> np.ndarray:
    return np.fromiter(raw, dtype=np.int64, count=len(raw))
