import random

import numpy as np
import pytest

from circrank.circulant import (
    CirculantSpec,
    DenseMatrix,
    DoubleCirculantSpec,
    MultiCirculantSpec,
    block_diagonal,
    build_double_circulant,
    build_generalized_circulant,
    build_multiple_circulant,
    generalized_fourier,
    vandermonde_column,
)
from circrank.errors import MixedFieldError, OrderMismatchError, SpecError
from circrank.field import ExtField, PrimeField, primitive_root_of_unity, root_of_unity_in
from circrank.poly import Poly
from circrank.rank import consecutive_rows_independent, gaussian_rank

F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)
F7 = PrimeField(7)
G9 = ExtField(F3, [1, 0, 1])


def P(ctx, *ints):
    return Poly.from_ints(ctx, list(ints))


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def test_generalized_circulant_gf3_fixture():
    M = build_generalized_circulant(CirculantSpec(P(F3, 1, 1, 1), 4, 4))
    assert M.to_json() == [[1, 1, 1, 0], [0, 1, 1, 1], [1, 0, 1, 1], [1, 1, 0, 1]]


def test_generalized_circulant_zero_poly():
    M = build_generalized_circulant(CirculantSpec(Poly.zero(F5), 3, 4))
    assert M.is_zero() and M.rows == 4 and M.cols == 3


def test_generalized_circulant_wraps_past_n():
    M = build_generalized_circulant(CirculantSpec(P(F2, 1), 3, 5))
    assert M.to_json() == [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, 0], [0, 1, 0]]


def test_row_shift_property_random():
    rng = random.Random(8)
    for _ in range(25):
        ctx = random.Random(rng.random()).choice([F3, F5, F7])
        n = rng.choice([k for k in range(1, 8) if k % ctx.char])
        m = rng.randrange(1, 2 * n + 2)
        g = Poly.from_ints(ctx, [rng.randrange(ctx.order) for _ in range(n)])
        M = build_generalized_circulant(CirculantSpec(g, n, m))
        arr = M.data
        for i in range(m - 1):
            assert np.array_equal(arr[i + 1], np.roll(arr[i], 1))
        if m > n:
            assert np.array_equal(arr[n], arr[0])


def test_double_circulant_fixtures():
    spec = DoubleCirculantSpec(P(F3, 1, 1, 1), 4, P(F3, 2, 1), 2, 4)
    assert build_double_circulant(spec).to_json() == [
        [1, 1, 1, 0, 2, 1],
        [0, 1, 1, 1, 1, 2],
        [1, 0, 1, 1, 2, 1],
        [1, 1, 0, 1, 1, 2],
    ]
    spec5 = DoubleCirculantSpec(P(F5, 4, 1), 2, P(F5, 3, 1, 1), 3, 5)
    assert build_double_circulant(spec5).to_json() == [
        [4, 1, 3, 1, 1],
        [1, 4, 1, 3, 1],
        [4, 1, 1, 1, 3],
        [1, 4, 3, 1, 1],
        [4, 1, 1, 3, 1],
    ]


def test_double_circulant_blocks_match_singles():
    rng = random.Random(12)
    for _ in range(20):
        n, n_p = rng.choice([1, 2, 4]), rng.choice([1, 2, 4])
        m = rng.randrange(1, 7)
        g = Poly.from_ints(F3, [rng.randrange(3) for _ in range(n)])
        gp = Poly.from_ints(F3, [rng.randrange(3) for _ in range(n_p)])
        M = build_double_circulant(DoubleCirculantSpec(g, n, gp, n_p, m))
        left = build_generalized_circulant(CirculantSpec(g, n, m))
        right = build_generalized_circulant(CirculantSpec(gp, n_p, m))
        assert np.array_equal(M.data[:, :n], left.data)
        assert np.array_equal(M.data[:, n:], right.data)


def test_double_zero_blocks_give_zero_matrix():
    spec = DoubleCirculantSpec(Poly.zero(F3), 2, Poly.zero(F3), 4, 3)
    assert build_double_circulant(spec).is_zero()


def test_multiple_reduces_to_single_and_double():
    g = P(F7, 6, 1)
    gp = P(F7, 5, 1, 1)
    single = build_multiple_circulant(MultiCirculantSpec(((g, 2),), 4))
    assert single == build_generalized_circulant(CirculantSpec(g, 2, 4))
    double = build_multiple_circulant(MultiCirculantSpec(((g, 2), (gp, 3)), 5))
    assert double == build_double_circulant(DoubleCirculantSpec(g, 2, gp, 3, 5))


def test_multiple_three_block_fixture():
    spec = MultiCirculantSpec(((P(F7, 6, 1), 2), (P(F7, 5, 1, 1), 3), (P(F7, 1), 1)), 6)
    M = build_multiple_circulant(spec)
    assert M.rows == 6 and M.cols == 6
    assert [row[5] for row in M.to_json()] == [1] * 6  # length-1 block of ones


def test_spec_validation():
    with pytest.raises(SpecError):
        CirculantSpec(P(F3, 1, 1, 1, 1), 3, 2)  # deg g >= n
    with pytest.raises(SpecError):
        CirculantSpec(P(F3, 1), 3, 2)  # char divides n
    with pytest.raises(SpecError):
        CirculantSpec(P(F3, 1), 4, 0)  # m < 1
    with pytest.raises(MixedFieldError):
        DoubleCirculantSpec(P(F3, 1), 2, P(F5, 1), 2, 2)
    with pytest.raises(SpecError):
        build_generalized_circulant(CirculantSpec(P(F3, 1), 1000, 1001), max_entries=10**6)


# ---------------------------------------------------------------------------
# Vandermonde columns and Fourier matrices
# ---------------------------------------------------------------------------

def test_vandermonde_examples():
    assert vandermonde_column(F3.elem(1), 4).to_json() == [[1], [1], [1], [1]]
    assert vandermonde_column(F3.elem(2), 4).to_json() == [[1], [2], [1], [2]]
    x = G9.elem_from_coeffs([0, 1])
    assert vandermonde_column(x, 3).to_json() == [[[1, 0]], [[0, 1]], [[2, 0]]]


def test_fourier_examples():
    ones = generalized_fourier(F5.elem(1), 3, 1)
    assert ones.to_json() == [[1], [1], [1]]
    two_by_two = generalized_fourier(F3.elem(2), 2, 2)
    assert two_by_two.to_json() == [[1, 1], [1, 2]]
    x = G9.elem_from_coeffs([0, 1])
    phi = generalized_fourier(x, 2, 4)
    assert phi.to_json() == [
        [[1, 0], [1, 0], [1, 0], [1, 0]],
        [[1, 0], [0, 1], [2, 0], [0, 2]],
    ]


def test_fourier_rejects_wrong_order():
    with pytest.raises(OrderMismatchError):
        generalized_fourier(F3.elem(2), 2, 4)  # 2 has order 2, not 4
    with pytest.raises(OrderMismatchError):
        generalized_fourier(F3.elem(0), 2, 1)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_fourier_rank_is_min_dim(p):
    ctx_base = PrimeField(p)
    for n in [k for k in range(1, 6) if k % p]:
        big, omega = primitive_root_of_unity(n, p)
        for m in (1, n, n + 2):
            phi = generalized_fourier(omega, m, n)
            r = min(m, n)
            assert gaussian_rank(phi) == r
            assert consecutive_rows_independent(phi, 0, r)
    assert ctx_base.order == p


# ---------------------------------------------------------------------------
# DenseMatrix operations
# ---------------------------------------------------------------------------

def test_matmul_prime_matches_manual():
    A = DenseMatrix(F5, [[1, 2], [3, 4], [0, 1]])
    B = DenseMatrix(F5, [[2, 0, 1], [1, 1, 0]])
    assert (A @ B).to_json() == [[4, 2, 1], [0, 4, 3], [1, 1, 0]]


def test_matmul_ext_matches_object_loop():
    rng = random.Random(77)
    for ctx in (G9, ExtField(F5, [2, 0, 1]), ExtField(F2, [1, 1, 0, 1])):
        rows, inner, cols = 3, 4, 2
        A = DenseMatrix(ctx, [[[rng.randrange(ctx.char) for _ in range(ctx.degree)]
                               for _ in range(inner)] for _ in range(rows)])
        B = DenseMatrix(ctx, [[[rng.randrange(ctx.char) for _ in range(ctx.degree)]
                               for _ in range(cols)] for _ in range(inner)])
        fast = A @ B
        a, b = A._raw_rows(), B._raw_rows()
        for i in range(rows):
            for j in range(cols):
                acc = ctx.zero_raw
                for t in range(inner):
                    acc = ctx.add(acc, ctx.mul(a[i][t], b[t][j]))
                assert fast.entry(i, j).raw == acc


def test_scale_columns_and_stacking():
    M = DenseMatrix(F7, [[1, 2, 3], [4, 5, 6]])
    scaled = M.scale_columns([F7.elem(2), F7.elem(0), F7.elem(1)])
    assert scaled.to_json() == [[2, 0, 3], [1, 0, 6]]
    tall = M.vstack(scaled)
    assert tall.rows == 4
    wide = M.hstack(scaled)
    assert wide.cols == 6
    assert tall.window(2, 2) == scaled


def test_embed_into_extension():
    M = DenseMatrix(F3, [[1, 2], [0, 1]])
    up = M.embed_into(G9)
    assert up.entry(0, 1) == G9.elem(2)
    assert up.entry(1, 0).is_zero()


def test_block_diagonal_assembly():
    A = DenseMatrix(F3, [[1]])
    B = DenseMatrix(F3, [[2, 0], [1, 1]])
    D = block_diagonal([A, B])
    assert D.to_json() == [[1, 0, 0], [0, 2, 0], [0, 1, 1]]


def test_matrix_data_is_immutable():
    M = DenseMatrix(F3, [[1, 2], [0, 1]])
    with pytest.raises(ValueError):
        M.data[0, 0] = 2


def test_window_bounds_checked():
    M = DenseMatrix(F3, [[1, 2], [0, 1]])
    with pytest.raises(IndexError):
        M.window(1, 2)


# ---------------------------------------------------------------------------
# eigen-identity at the matrix level (columns of the Fourier matrix)
# ---------------------------------------------------------------------------

def test_circulant_times_vandermonde_column():
    spec = CirculantSpec(P(F3, 1, 1, 1), 4, 6)
    M = build_generalized_circulant(spec).embed_into(G9)
    omega = root_of_unity_in(G9, 4)
    acc = G9.one()
    for _ in range(4):
        lhs = M @ vandermonde_column(acc, 4)
        rhs = vandermonde_column(acc, 6).scale_columns([spec.g.eval(acc)])
        assert lhs == rhs
        acc = acc * omega
