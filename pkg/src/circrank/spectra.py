"""Spectral checks for circulant-type matrices over minimal extension fields.

verify_eigen_identity confirms M(g) V(w^j) = g(w^j) V(w^j)_m for every n-th
root of unity w^j; verify_diagonalization confirms the full matrix identity
M Phi = Phi' diag(values) (single block) and its two-block analogue with the
block-diagonal Fourier matrix.  kernel_basis builds, for the square double
circulant (m = n + n'), the d = e + e' + ebar explicit null vectors:

  E1(j):    (V(w^j)_n ; 0)            for roots w^j of gcd(g, X^n - 1)
  E2(j'):   (0 ; V(w'^j')_n')         for roots w'^j' of gcd(g', X^n' - 1)
  E3(jbar): (-g'(z) V(z)_n ; g(z) V(z)_n')  for z = eta^jbar killing neither
            block, eta = w^(n/l) a primitive l-th root, l = gcd(n, n')

All vectors are verified against the matrix and checked for joint linear
independence before being returned.  Checks run in one extension field
containing every root of unity involved; base-field matrices are embedded
once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circulant import (
    CirculantSpec,
    DenseMatrix,
    DoubleCirculantSpec,
    block_diagonal,
    build_double_circulant,
    build_generalized_circulant,
    generalized_fourier,
    vandermonde_column,
)
from .errors import InternalCheckError, NoEmbeddingError, NotSquareError
from .field import FieldElem, field_with_root_order, root_of_unity_in
from .poly import gcd, x_pow_minus_one
from .rank import _rank_raw_rows, double_rank_components, gaussian_rank


def spectral_field(ctx, orders):
    """One field containing a root of unity for every order requested."""
    if not ctx.is_prime_field:
        raise NoEmbeddingError("spectral checks support prime base fields only")
    return field_with_root_order(ctx.p, orders)


def _powers(x: FieldElem, n: int) -> list[FieldElem]:
    out, acc = [], x.ctx.one()
    for _ in range(n):
        out.append(acc)
        acc = acc * x
    return out


def verify_eigen_identity(spec: CirculantSpec) -> bool:
    """Column eigen-identity of the single-block circulant, all n roots."""
    big = spectral_field(spec.ctx, [spec.n])
    omega = root_of_unity_in(big, spec.n)
    m_emb = build_generalized_circulant(spec).embed_into(big)
    for zeta in _powers(omega, spec.n):
        lhs = m_emb @ vandermonde_column(zeta, spec.n)
        rhs = vandermonde_column(zeta, spec.m).scale_columns([spec.g.eval(zeta)])
        if lhs != rhs:
            return False
    return True


def verify_double_eigen_identity(spec: DoubleCirculantSpec) -> bool:
    """Padded-column eigen-identities of the double circulant, both blocks."""
    big = spectral_field(spec.ctx, [spec.n, spec.n_prime])
    omega = root_of_unity_in(big, spec.n)
    omega_p = root_of_unity_in(big, spec.n_prime)
    m_emb = build_double_circulant(spec).embed_into(big)
    zeros_n = DenseMatrix.zeros(big, spec.n, 1)
    zeros_np = DenseMatrix.zeros(big, spec.n_prime, 1)
    for zeta in _powers(omega, spec.n):
        padded = vandermonde_column(zeta, spec.n).vstack(zeros_np)
        rhs = vandermonde_column(zeta, spec.m).scale_columns([spec.g.eval(zeta)])
        if m_emb @ padded != rhs:
            return False
    for zeta in _powers(omega_p, spec.n_prime):
        padded = zeros_n.vstack(vandermonde_column(zeta, spec.n_prime))
        rhs = vandermonde_column(zeta, spec.m).scale_columns([spec.g_prime.eval(zeta)])
        if m_emb @ padded != rhs:
            return False
    return True


def verify_diagonalization(spec) -> bool:
    """Full matrix identity M Phi = Phi' diag(g values), entrywise."""
    if isinstance(spec, CirculantSpec):
        big = spectral_field(spec.ctx, [spec.n])
        omega = root_of_unity_in(big, spec.n)
        m_emb = build_generalized_circulant(spec).embed_into(big)
        lhs = m_emb @ generalized_fourier(omega, spec.n, spec.n)
        values = [spec.g.eval(z) for z in _powers(omega, spec.n)]
        rhs = generalized_fourier(omega, spec.m, spec.n).scale_columns(values)
        return lhs == rhs
    if isinstance(spec, DoubleCirculantSpec):
        big = spectral_field(spec.ctx, [spec.n, spec.n_prime])
        omega = root_of_unity_in(big, spec.n)
        omega_p = root_of_unity_in(big, spec.n_prime)
        m_emb = build_double_circulant(spec).embed_into(big)
        lhs = m_emb @ block_diagonal(
            [
                generalized_fourier(omega, spec.n, spec.n),
                generalized_fourier(omega_p, spec.n_prime, spec.n_prime),
            ]
        )
        values = [spec.g.eval(z) for z in _powers(omega, spec.n)]
        values += [spec.g_prime.eval(z) for z in _powers(omega_p, spec.n_prime)]
        concat = generalized_fourier(omega, spec.m, spec.n).hstack(
            generalized_fourier(omega_p, spec.m, spec.n_prime)
        )
        return lhs == concat.scale_columns(values)
    raise TypeError("expected a CirculantSpec or DoubleCirculantSpec")


@dataclass(frozen=True)
class KernelVector:
    tag: str
    root: FieldElem
    entries: tuple[FieldElem, ...]


@dataclass(frozen=True)
class KernelBasis:
    field: object
    e: int
    e_prime: int
    e_bar: int
    d: int
    vectors: tuple[KernelVector, ...]

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "e": self.e,
            "ePrime": self.e_prime,
            "eBar": self.e_bar,
            "vectors": [
                {"tag": v.tag, "entries": [x.to_json() for x in v.entries]}
                for v in self.vectors
            ],
        }


def _column(entries) -> DenseMatrix:
    ctx = entries[0].ctx
    return DenseMatrix(ctx, [[e.raw] for e in entries])


def kernel_basis(spec: DoubleCirculantSpec) -> KernelBasis:
    """The d tagged null vectors of the square double circulant, verified
    in-kernel and jointly independent; ordered E1 by ascending j, then E2,
    then E3 by ascending jbar."""
    total = spec.n + spec.n_prime
    if spec.m != total:
        raise NotSquareError(f"m = {spec.m} but n + n' = {total}")
    comp = double_rank_components(spec.g, spec.n, spec.g_prime, spec.n_prime)
    big = spectral_field(spec.ctx, [spec.n, spec.n_prime])
    omega = root_of_unity_in(big, spec.n)
    omega_p = root_of_unity_in(big, spec.n_prime)
    eta = omega ** (spec.n // comp.ell)
    zero = big.zero()

    gcd_g = gcd(spec.g, x_pow_minus_one(spec.n, spec.ctx))
    gcd_gp = gcd(spec.g_prime, x_pow_minus_one(spec.n_prime, spec.ctx))

    vectors: list[KernelVector] = []
    for j, zeta in enumerate(_powers(omega, spec.n)):
        if gcd_g.eval(zeta).is_zero():
            entries = tuple(_vandermonde_entries(zeta, spec.n)) + (zero,) * spec.n_prime
            vectors.append(KernelVector(tag=f"E1({j})", root=zeta, entries=entries))
    e1_count = len(vectors)
    for j, zeta in enumerate(_powers(omega_p, spec.n_prime)):
        if gcd_gp.eval(zeta).is_zero():
            entries = (zero,) * spec.n + tuple(_vandermonde_entries(zeta, spec.n_prime))
            vectors.append(KernelVector(tag=f"E2({j})", root=zeta, entries=entries))
    e2_count = len(vectors) - e1_count
    for j, zeta in enumerate(_powers(eta, comp.ell)):
        g_val = spec.g.eval(zeta)
        gp_val = spec.g_prime.eval(zeta)
        if not g_val.is_zero() and not gp_val.is_zero():
            top = [-gp_val * v for v in _vandermonde_entries(zeta, spec.n)]
            bottom = [g_val * v for v in _vandermonde_entries(zeta, spec.n_prime)]
            vectors.append(
                KernelVector(tag=f"E3({j})", root=zeta, entries=tuple(top + bottom))
            )
    e3_count = len(vectors) - e1_count - e2_count

    if (e1_count, e2_count, e3_count) != (comp.e, comp.e_prime, comp.e_bar):
        raise InternalCheckError("root counts disagree with the gcd degrees")

    m_emb = build_double_circulant(spec).embed_into(big)
    for vec in vectors:
        if not (m_emb @ _column(list(vec.entries))).is_zero():
            raise InternalCheckError(f"{vec.tag} is not in the kernel")
    if vectors:
        rank = _rank_raw_rows(big, [[e.raw for e in v.entries] for v in vectors])
        if rank != comp.d:
            raise InternalCheckError("kernel vectors are not independent")

    return KernelBasis(
        field=big,
        e=comp.e,
        e_prime=comp.e_prime,
        e_bar=comp.e_bar,
        d=comp.d,
        vectors=tuple(vectors),
    )


def _vandermonde_entries(zeta: FieldElem, m: int) -> list[FieldElem]:
    return _powers(zeta, m)


def kernel_dimension_oracle(spec: DoubleCirculantSpec) -> int:
    """Base-field nullity of the square double circulant: (n + n') - rank."""
    total = spec.n + spec.n_prime
    if spec.m != total:
        raise NotSquareError(f"m = {spec.m} but n + n' = {total}")
    return total - gaussian_rank(build_double_circulant(spec))
