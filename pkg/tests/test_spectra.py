import random

import pytest

from circrank.circulant import CirculantSpec, DoubleCirculantSpec, build_double_circulant
from circrank.errors import NotSquareError
from circrank.field import PrimeField
from circrank.poly import Poly
from circrank.rank import gaussian_rank
from circrank.spectra import (
    kernel_basis,
    kernel_dimension_oracle,
    verify_diagonalization,
    verify_double_eigen_identity,
    verify_eigen_identity,
)

F3 = PrimeField(3)
F5 = PrimeField(5)
F7 = PrimeField(7)


def P(ctx, *ints):
    return Poly.from_ints(ctx, list(ints))


def gf3_square_spec():
    return DoubleCirculantSpec(P(F3, 1, 1, 1), 4, P(F3, 2, 1), 2, 6)


def gf5_square_spec():
    return DoubleCirculantSpec(P(F5, 4, 1), 2, P(F5, 3, 1, 1), 3, 5)


# ---------------------------------------------------------------------------
# eigen-identities
# ---------------------------------------------------------------------------

def test_eigen_identity_unit_polynomial():
    assert verify_eigen_identity(CirculantSpec(Poly.one(F5), 3, 4))


def test_eigen_identity_gf3_fixture():
    assert verify_eigen_identity(CirculantSpec(P(F3, 1, 1, 1), 4, 4))


def test_eigen_identity_gf5_short():
    assert verify_eigen_identity(CirculantSpec(P(F5, 4, 1), 2, 3))


def test_double_eigen_identity_fixtures():
    assert verify_double_eigen_identity(gf3_square_spec())
    assert verify_double_eigen_identity(gf5_square_spec())


# ---------------------------------------------------------------------------
# diagonalization
# ---------------------------------------------------------------------------

def test_diagonalization_length_one_block():
    assert verify_diagonalization(CirculantSpec(P(F5, 3), 1, 4))


def test_diagonalization_fixtures():
    assert verify_diagonalization(CirculantSpec(P(F3, 1, 1, 1), 4, 4))
    assert verify_diagonalization(gf3_square_spec())
    assert verify_diagonalization(gf5_square_spec())


def test_diagonalization_random_specs():
    rng = random.Random(44)
    for _ in range(15):
        p = rng.choice((3, 5, 7))
        ctx = PrimeField(p)
        n = rng.choice([k for k in range(1, 6) if k % p])
        m = rng.randrange(1, 2 * n + 2)
        g = Poly.from_ints(ctx, [rng.randrange(p) for _ in range(rng.randrange(n + 1))])
        assert verify_diagonalization(CirculantSpec(g, n, m))
        assert verify_eigen_identity(CirculantSpec(g, n, m))


# ---------------------------------------------------------------------------
# kernel basis
# ---------------------------------------------------------------------------

def test_kernel_basis_gf3_fixture():
    basis = kernel_basis(gf3_square_spec())
    assert basis.d == 3 and (basis.e, basis.e_prime, basis.e_bar) == (1, 1, 1)
    tags = [v.tag for v in basis.vectors]
    assert tags == ["E1(0)", "E2(0)", "E3(1)"]
    as_ints = [[x.to_json() for x in v.entries] for v in basis.vectors]
    flat = [[c[0] for c in row] for row in as_ints]  # base-field values, lifted
    assert flat == [
        [1, 1, 1, 1, 0, 0],
        [0, 0, 0, 0, 1, 1],
        [2, 1, 2, 1, 1, 2],
    ]


def test_kernel_basis_gf5_fixture():
    basis = kernel_basis(gf5_square_spec())
    assert basis.d == 2 and basis.e_bar == 0
    assert [v.tag for v in basis.vectors] == ["E1(0)", "E2(0)"]


def test_kernel_basis_minimal_all_e3():
    # both gcds trivial and l = 1: the single null vector comes from E3
    spec = DoubleCirculantSpec(P(F5, 1), 2, P(F5, 1), 3, 5)
    basis = kernel_basis(spec)
    assert basis.d == 1 and basis.e == basis.e_prime == 0 and basis.e_bar == 1
    assert basis.vectors[0].tag == "E3(0)"


def test_kernel_basis_zero_blocks():
    spec = DoubleCirculantSpec(Poly.zero(F3), 4, Poly.zero(F3), 2, 6)
    basis = kernel_basis(spec)
    assert basis.d == 6 and basis.e == 4 and basis.e_prime == 2 and basis.e_bar == 0


def test_kernel_requires_square():
    with pytest.raises(NotSquareError):
        kernel_basis(DoubleCirculantSpec(P(F3, 1, 1, 1), 4, P(F3, 2, 1), 2, 4))
    with pytest.raises(NotSquareError):
        kernel_dimension_oracle(DoubleCirculantSpec(P(F3, 1), 2, P(F3, 1), 2, 3))


def test_kernel_vectors_annihilated_by_matrix():
    rng = random.Random(55)
    for _ in range(10):
        p = rng.choice((3, 5))
        ctx = PrimeField(p)
        lengths = [k for k in range(1, 6) if k % p]
        n, n_p = rng.choice(lengths), rng.choice(lengths)
        g = Poly.from_ints(ctx, [rng.randrange(p) for _ in range(rng.randrange(n + 1))])
        gp = Poly.from_ints(ctx, [rng.randrange(p) for _ in range(rng.randrange(n_p + 1))])
        spec = DoubleCirculantSpec(g, n, gp, n_p, n + n_p)
        basis = kernel_basis(spec)  # construction itself verifies membership
        assert len(basis.vectors) == basis.d
        assert kernel_dimension_oracle(spec) == basis.d


def test_nullity_oracle_fixtures():
    assert kernel_dimension_oracle(gf3_square_spec()) == 3
    assert kernel_dimension_oracle(gf5_square_spec()) == 2
    zero_spec = DoubleCirculantSpec(Poly.zero(F3), 4, Poly.zero(F3), 2, 6)
    assert kernel_dimension_oracle(zero_spec) == 6
    assert gaussian_rank(build_double_circulant(zero_spec)) == 0


def test_e3_block_swap_antisymmetry():
    # swapping the two blocks maps E3 vectors (matched by their root of
    # unity) to the block-swapped negatives
    specs = [
        gf3_square_spec(),
        DoubleCirculantSpec(P(F5, 1), 2, P(F5, 1), 3, 5),
        DoubleCirculantSpec(P(F5, 1, 1), 3, P(F5, 2, 0, 1), 4, 7),
    ]
    for spec in specs:
        basis = kernel_basis(spec)
        swapped = kernel_basis(spec.swapped())
        mine = {v.root: v for v in basis.vectors if v.tag.startswith("E3")}
        theirs = {v.root: v for v in swapped.vectors if v.tag.startswith("E3")}
        assert set(mine) == set(theirs)
        for root, vec in mine.items():
            other = theirs[root]
            rotated = other.entries[spec.n_prime:] + other.entries[:spec.n_prime]
            assert tuple(-x for x in rotated) == vec.entries


def test_kernel_json_shape():
    doc = kernel_basis(gf3_square_spec()).to_json_dict()
    assert set(doc) == {"d", "e", "ePrime", "eBar", "vectors"}
    assert all(set(v) == {"tag", "entries"} for v in doc["vectors"])
    assert len(doc["vectors"]) == doc["d"]
