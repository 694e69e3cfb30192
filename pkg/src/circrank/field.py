"""Exact arithmetic in prime fields GF(p) and extensions GF(p^k).

A field context (PrimeField or ExtField) owns the arithmetic; FieldElem is
a thin immutable wrapper around a raw representation: an int residue in
[0, p) for prime fields, a length-k tuple of residues (coefficients of the
class of X, lowest power first) for extensions.  Contexts compare equal by
value, so two independently built GF(9) contexts with the same modulus are
interchangeable.

Extensions are built on demand: find_irreducible returns a deterministic
modulus (smallest by integer encoding of the coefficient vector), and
primitive_root_of_unity finds the smallest extension containing an element
of a given multiplicative order.
"""

from __future__ import annotations

import functools
import math
from typing import Iterator, Sequence, Union

from .errors import CharDividesNError, MixedFieldError, NoEmbeddingError

# p*p must fit in int64 for the vectorized kernels
MAX_PRIME = 1 << 31

RawElem = Union[int, tuple]

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for everything below 3.3e24)."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> tuple[int, ...]:
    """Distinct prime factors of n by trial division (desk-scale n)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


class FieldElem:
    """An element of a PrimeField or ExtField; immutable, compares by value."""

    __slots__ = ("ctx", "raw")

    def __init__(self, ctx, raw: RawElem):
        self.ctx = ctx
        self.raw = raw

    def _coerce(self, other) -> RawElem:
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise MixedFieldError(f"{other.ctx} element used in {self.ctx}")
            return other.raw
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.add(self.raw, raw))

    __radd__ = __add__

    def __sub__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.sub(self.raw, raw))

    def __rsub__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.sub(raw, self.raw))

    def __mul__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.mul(self.raw, raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.mul(self.raw, self.ctx.inv(raw)))

    def __rtruediv__(self, other):
        raw = self._coerce(other)
        if raw is NotImplemented:
            return NotImplemented
        return FieldElem(self.ctx, self.ctx.mul(raw, self.ctx.inv(self.raw)))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.raw))

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.pow(self.raw, e))

    def inv(self) -> "FieldElem":
        return FieldElem(self.ctx, self.ctx.inv(self.raw))

    def is_zero(self) -> bool:
        return self.raw == self.ctx.zero_raw

    def is_one(self) -> bool:
        return self.raw == self.ctx.one_raw

    def has_order(self, n: int) -> bool:
        """True iff the multiplicative order is exactly n."""
        if self.is_zero():
            return False
        if self.ctx.pow(self.raw, n) != self.ctx.one_raw:
            return False
        return all(
            self.ctx.pow(self.raw, n // q) != self.ctx.one_raw
            for q in prime_factors(n)
        )

    def multiplicative_order(self) -> int:
        if self.is_zero():
            raise ZeroDivisionError("zero has no multiplicative order")
        acc, order = self.raw, 1
        while acc != self.ctx.one_raw:
            acc = self.ctx.mul(acc, self.raw)
            order += 1
        return order

    def to_json(self):
        """int for prime fields, coefficient list for extensions."""
        return self.raw if isinstance(self.raw, int) else list(self.raw)

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.ctx == other.ctx and self.raw == other.raw
        if isinstance(other, int):
            return self.raw == self.ctx.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.raw))

    def __repr__(self):
        return f"{self.ctx}:{self}"

    def __str__(self):
        if isinstance(self.raw, int):
            return str(self.raw)
        return "(" + ",".join(str(c) for c in self.raw) + ")"


class PrimeField:
    """GF(p) for an odd prime or 2; raw elements are ints in [0, p)."""

    __slots__ = ("p",)

    is_prime_field = True
    degree = 1
    zero_raw = 0
    one_raw = 1

    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= MAX_PRIME:
            raise ValueError(f"prime {p} exceeds the {MAX_PRIME} kernel cap")
        self.p = p

    @property
    def char(self) -> int:
        return self.p

    @property
    def order(self) -> int:
        return self.p

    def from_int(self, v: int) -> int:
        return v % self.p

    def elem(self, v) -> FieldElem:
        if isinstance(v, FieldElem):
            if v.ctx != self:
                raise MixedFieldError(f"{v.ctx} element used in {self}")
            return v
        return FieldElem(self, self.from_int(v))

    def zero(self) -> FieldElem:
        return FieldElem(self, 0)

    def one(self) -> FieldElem:
        return FieldElem(self, 1)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        return pow(a, -1, self.p)

    def pow(self, a, e: int):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def elements(self) -> Iterator[FieldElem]:
        for v in range(self.p):
            yield FieldElem(self, v)

    def embed_raw(self, src_ctx, raw):
        if src_ctx == self:
            return raw
        raise NoEmbeddingError(f"no embedding of {src_ctx} into {self}")

    def elem_from_json(self, v) -> FieldElem:
        if not isinstance(v, int):
            raise ValueError(f"{self} element must be an integer, got {v!r}")
        return self.elem(v)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class ExtField:
    """GF(p^k) as GF(p)[X] modulo a monic irreducible of degree k.

    Raw elements are length-k int tuples (coefficients of 1, X, ...,
    X^(k-1)).  A degree-1 extension behaves exactly like its base field,
    just with (v,) wrappers.
    """

    __slots__ = ("base", "k", "mod_coeffs")

    is_prime_field = False

    def __init__(self, base: PrimeField, modulus):
        self.base = base
        coeffs = _modulus_ints(modulus, base.p)
        if len(coeffs) < 2:
            raise ValueError("modulus must have degree >= 1")
        if coeffs[-1] != 1:
            raise ValueError("modulus must be monic")
        if not _is_irreducible_ints(coeffs, base.p):
            raise ValueError(f"modulus {list(coeffs)} is reducible over {base}")
        self.mod_coeffs = coeffs
        self.k = len(coeffs) - 1

    @property
    def char(self) -> int:
        return self.base.p

    @property
    def degree(self) -> int:
        return self.k

    @property
    def order(self) -> int:
        return self.base.p ** self.k

    @property
    def zero_raw(self) -> tuple:
        return (0,) * self.k

    @property
    def one_raw(self) -> tuple:
        return (1,) + (0,) * (self.k - 1)

    @property
    def modulus(self):
        from .poly import Poly

        return Poly.from_ints(self.base, list(self.mod_coeffs))

    def from_int(self, v: int) -> tuple:
        return (v % self.base.p,) + (0,) * (self.k - 1)

    def elem(self, v) -> FieldElem:
        if isinstance(v, FieldElem):
            if v.ctx != self:
                raise MixedFieldError(f"{v.ctx} element used in {self}")
            return v
        if isinstance(v, int):
            return FieldElem(self, self.from_int(v))
        return self.elem_from_coeffs(v)

    def elem_from_coeffs(self, coeffs: Sequence[int]) -> FieldElem:
        if len(coeffs) > self.k:
            raise ValueError(f"at most {self.k} coefficients expected")
        p = self.base.p
        raw = tuple(c % p for c in coeffs) + (0,) * (self.k - len(coeffs))
        return FieldElem(self, raw)

    def zero(self) -> FieldElem:
        return FieldElem(self, self.zero_raw)

    def one(self) -> FieldElem:
        return FieldElem(self, self.one_raw)

    def add(self, a, b):
        p = self.base.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.base.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        p = self.base.p
        return tuple(-x % p for x in a)

    def mul(self, a, b):
        p, k = self.base.p, self.k
        conv = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] = (conv[i + j] + ai * bj) % p
        mod = self.mod_coeffs
        for i in range(2 * k - 2, k - 1, -1):
            c = conv[i]
            if c:
                conv[i] = 0
                for j in range(k):
                    conv[i - k + j] = (conv[i - k + j] - c * mod[j]) % p
        return tuple(conv[:k])

    def inv(self, a):
        if a == self.zero_raw:
            raise ZeroDivisionError(f"inverse of zero in {self}")
        p = self.base.p
        # extended Euclid in GF(p)[X] against the modulus
        r0, r1 = list(self.mod_coeffs), _trim_ints(list(a))
        t0, t1 = [], [1]
        while r1:
            q, r = _divmod_ints(r0, r1, p)
            r0, r1 = r1, r
            t0, t1 = t1, _sub_ints(t0, _mul_ints(q, t1, p), p)
        lead_inv = pow(r0[-1], -1, p)
        t0 = [c * lead_inv % p for c in t0]
        return tuple(t0[:self.k]) + (0,) * (self.k - len(t0))

    def pow(self, a, e: int):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one_raw
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def elements(self) -> Iterator[FieldElem]:
        """All elements, ordered by the integer encoding sum(c_i * p^i)."""
        p, k = self.base.p, self.k
        for v in range(self.order):
            digits = []
            x = v
            for _ in range(k):
                x, r = divmod(x, p)
                digits.append(r)
            yield FieldElem(self, tuple(digits))

    def embed_raw(self, src_ctx, raw):
        if src_ctx == self:
            return raw
        if src_ctx == self.base:
            return (raw,) + (0,) * (self.k - 1)
        raise NoEmbeddingError(f"no embedding of {src_ctx} into {self}")

    def elem_from_json(self, v) -> FieldElem:
        if isinstance(v, int):
            return self.elem(v)
        if isinstance(v, list):
            return self.elem_from_coeffs(v)
        raise ValueError(f"{self} element must be an int or list, got {v!r}")

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and other.base == self.base
            and other.mod_coeffs == self.mod_coeffs
        )

    def __hash__(self):
        return hash(("ExtField", self.base.p, self.mod_coeffs))

    def __repr__(self):
        return f"GF({self.base.p}^{self.k})"


# -- int-list polynomial helpers (internal; Poly is built on top of these) --

def _trim_ints(v: list[int]) -> list[int]:
    while v and v[-1] == 0:
        v.pop()
    return v


def _sub_ints(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i in range(n):
        x = a[i] if i < len(a) else 0
        y = b[i] if i < len(b) else 0
        out[i] = (x - y) % p
    return _trim_ints(out)


def _mul_ints(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _divmod_ints(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    r = list(a)
    lb = len(b)
    if len(r) < lb:
        return [], r
    q = [0] * (len(r) - lb + 1)
    inv_lead = pow(b[-1], -1, p)
    for shift in range(len(r) - lb, -1, -1):
        c = r[shift + lb - 1] * inv_lead % p
        if c:
            q[shift] = c
            for j in range(lb):
                r[shift + j] = (r[shift + j] - c * b[j]) % p
    return _trim_ints(q), _trim_ints(r)


def _modulus_ints(modulus, p: int) -> tuple[int, ...]:
    # accept a Poly or any coefficient sequence
    coeffs = getattr(modulus, "raw", None)
    if coeffs is None or not isinstance(coeffs, tuple):
        coeffs = tuple(int(c) % p for c in modulus)
    return tuple(int(c) % p for c in coeffs)


def _is_irreducible_ints(coeffs: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    k = len(coeffs) - 1
    if k == 1:
        return True
    a = list(coeffs)
    for d in range(1, k // 2 + 1):
        for v in range(p ** d):
            div, x = [], v
            for _ in range(d):
                x, rdig = divmod(x, p)
                div.append(rdig)
            div.append(1)
            _, rem = _divmod_ints(a, div, p)
            if not rem:
                return False
    return True


@functools.lru_cache(maxsize=None)
def _find_irreducible_coeffs(p: int, k: int) -> tuple[int, ...]:
    for v in range(p ** k):
        digits, x = [], v
        for _ in range(k):
            x, r = divmod(x, p)
            digits.append(r)
        cand = tuple(digits) + (1,)
        if _is_irreducible_ints(cand, p):
            return cand
    raise AssertionError("monic irreducibles of every degree exist")


def find_irreducible(p: int, k: int):
    """The monic irreducible of degree k over GF(p) that is smallest by the
    integer encoding sum(c_i * p^i) of its non-leading coefficients."""
    if k < 1:
        raise ValueError("degree must be >= 1")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    from .poly import Poly

    return Poly.from_ints(PrimeField(p), list(_find_irreducible_coeffs(p, k)))


def order_of_char_mod(n: int, p: int) -> int:
    """Multiplicative order of p modulo n: the least k with n | p^k - 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if math.gcd(n, p) != 1:
        raise CharDividesNError(f"characteristic {p} divides {n}")
    if n == 1:
        return 1
    acc, k = p % n, 1
    while acc != 1:
        acc = acc * p % n
        k += 1
    return k


@functools.lru_cache(maxsize=None)
def _root_of_unity_cached(ctx, n: int) -> FieldElem:
    for cand in ctx.elements():
        if cand.has_order(n):
            return cand
    raise AssertionError(f"no element of order {n} in {ctx}")


def root_of_unity_in(ctx, n: int) -> FieldElem:
    """Smallest element (by the scan order of ctx.elements) of multiplicative
    order exactly n; requires n | order(ctx) - 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if (ctx.order - 1) % n != 0:
        raise ValueError(f"{ctx} has no element of order {n}")
    return _root_of_unity_cached(ctx, n)


def field_with_root_order(p: int, orders) -> PrimeField | ExtField:
    """Smallest-degree field GF(p^K) containing elements of every order in
    `orders` (K = lcm of the per-order minimal degrees)."""
    ks = [order_of_char_mod(n, p) for n in orders]
    K = math.lcm(*ks) if ks else 1
    if K == 1:
        return PrimeField(p)
    return ExtField(PrimeField(p), _find_irreducible_coeffs(p, K))


def primitive_root_of_unity(n: int, p: int) -> tuple[PrimeField | ExtField, FieldElem]:
    """Minimal field GF(p^k) with n | p^k - 1, together with an element of
    multiplicative order exactly n (deterministic: first in scan order)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    ctx = field_with_root_order(p, [n])
    return ctx, root_of_unity_in(ctx, n)
