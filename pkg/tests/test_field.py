import itertools

import pytest

from circrank.errors import CharDividesNError, MixedFieldError, NoEmbeddingError
from circrank.field import (
    ExtField,
    PrimeField,
    find_irreducible,
    is_prime,
    order_of_char_mod,
    primitive_root_of_unity,
    root_of_unity_in,
)

from oracles import brute_is_irreducible, brute_order

F3 = PrimeField(3)
F5 = PrimeField(5)
G9 = ExtField(F3, [1, 0, 1])


# ---------------------------------------------------------------------------
# construction and primality
# ---------------------------------------------------------------------------

def test_prime_field_rejects_composites():
    for bad in (0, 1, 4, 9, 15, 2**31):
        with pytest.raises(ValueError):
            PrimeField(bad)


def test_is_prime_small_range():
    sieve = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(50):
        assert is_prime(n) == (n in sieve)
    assert is_prime(65521)
    assert not is_prime(65521 * 65537)


def test_ext_field_rejects_reducible_modulus():
    with pytest.raises(ValueError):
        ExtField(F3, [2, 0, 1])  # X^2 + 2 = (X-1)(X+1) over GF(3)
    with pytest.raises(ValueError):
        ExtField(F3, [1, 0, 2])  # not monic


def test_contexts_compare_by_value():
    assert PrimeField(3) == F3
    assert ExtField(F3, [1, 0, 1]) == G9
    assert hash(ExtField(F3, [1, 0, 1])) == hash(G9)
    assert PrimeField(5) != F3


# ---------------------------------------------------------------------------
# arithmetic
# ---------------------------------------------------------------------------

def test_prime_arith_examples():
    assert F5.elem(4) + F5.elem(3) == F5.elem(2)
    assert F5.elem(2).inv() == F5.elem(3)
    assert -F3.elem(1) == F3.elem(2)
    assert F5.elem(3) ** 0 == F5.elem(1)
    assert F5.elem(3) ** -1 == F5.elem(2)


def test_ext_defining_relation():
    x = G9.elem_from_coeffs([0, 1])
    assert x * x == G9.elem(2)  # X^2 = -1 = 2 under modulus X^2 + 1


def test_field_axioms_exhaustive_gf9():
    elems = list(G9.elements())
    assert len(elems) == 9
    for a, b in itertools.product(elems, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
    for a, b, c in itertools.product(elems[:5], elems[:5], elems[:5]):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("ctx", [F5, G9, ExtField(PrimeField(2), [1, 1, 1])])
def test_inverses_exhaustive(ctx):
    for a in ctx.elements():
        if a.is_zero():
            with pytest.raises(ZeroDivisionError):
                a.inv()
        else:
            assert a * a.inv() == ctx.one()


@pytest.mark.parametrize("ctx", [G9, ExtField(PrimeField(2), [1, 1, 0, 1]), ExtField(F5, [2, 0, 1])])
def test_frobenius_fixes_every_element(ctx):
    q = ctx.order
    for a in ctx.elements():
        assert a**q == a


def test_mixed_field_rejected():
    with pytest.raises(MixedFieldError):
        F3.elem(1) + F5.elem(1)
    with pytest.raises(MixedFieldError):
        G9.elem(1) * F3.elem(1)


def test_int_coercion_in_arith():
    assert F5.elem(4) + 3 == 2
    assert 2 * G9.elem_from_coeffs([0, 1]) == G9.elem_from_coeffs([0, 2])


def test_degree_one_extension_matches_prime_field():
    G5 = ExtField(F5, [0, 1])  # modulus X: arithmetic collapses to GF(5)
    assert G5.order == 5
    for a, b in itertools.product(range(5), repeat=2):
        assert (G5.elem(a) + G5.elem(b)).raw == (G5.elem((a + b) % 5)).raw
        assert (G5.elem(a) * G5.elem(b)).raw == (G5.elem(a * b % 5)).raw


def test_element_scan_order():
    raws = [e.raw for e in G9.elements()]
    assert raws[:4] == [(0, 0), (1, 0), (2, 0), (0, 1)]
    assert len(set(raws)) == 9


# ---------------------------------------------------------------------------
# irreducible search
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "p,k,expected",
    [
        (3, 1, [0, 1]),          # X
        (3, 2, [1, 0, 1]),       # X^2 + 1
        (2, 3, [1, 1, 0, 1]),    # X^3 + X + 1
    ],
)
def test_find_irreducible_pinned(p, k, expected):
    assert find_irreducible(p, k).to_json() == expected


@pytest.mark.parametrize("p,k", [(2, 2), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_find_irreducible_is_minimal_and_irreducible(p, k):
    got = find_irreducible(p, k).to_json()
    assert len(got) == k + 1 and got[-1] == 1
    assert brute_is_irreducible(got, p)
    # nothing smaller in the integer encoding of the low coefficients
    encoding = sum(c * p**i for i, c in enumerate(got[:-1]))
    for v in range(encoding):
        digits, x = [], v
        for _ in range(k):
            x, r = divmod(x, p)
            digits.append(r)
        assert not brute_is_irreducible(digits + [1], p)


def test_irreducible_has_no_roots():
    for p, k in [(3, 2), (2, 3), (5, 2)]:
        poly = find_irreducible(p, k)
        ctx = PrimeField(p)
        for a in ctx.elements():
            assert not poly.eval(a).is_zero()


# ---------------------------------------------------------------------------
# roots of unity
# ---------------------------------------------------------------------------

def test_primitive_root_examples():
    ctx, w = primitive_root_of_unity(2, 3)
    assert ctx == F3 and w == F3.elem(2)

    ctx, w = primitive_root_of_unity(4, 3)
    assert ctx == G9
    assert w.raw == (0, 1)  # the class of X
    assert brute_order(w) == 4

    ctx, w = primitive_root_of_unity(3, 5)
    assert ctx.degree == 2 and ctx.char == 5  # 5^2 - 1 = 24 is the first with 3 | p^k - 1
    assert brute_order(w) == 3


@pytest.mark.parametrize("n,p", [(1, 3), (2, 5), (4, 5), (5, 3), (6, 7), (7, 2), (8, 3)])
def test_primitive_root_contract(n, p):
    ctx, w = primitive_root_of_unity(n, p)
    assert (ctx.order - 1) % n == 0
    assert order_of_char_mod(n, p) == ctx.degree
    # minimality of the extension degree
    for smaller in range(1, ctx.degree):
        assert (p**smaller - 1) % n != 0
    assert brute_order(w) == n
    powers = set()
    acc = ctx.one()
    for _ in range(n):
        powers.add(acc.raw)
        acc = acc * w
    assert len(powers) == n
    assert acc == ctx.one()


def test_char_divides_n_rejected():
    with pytest.raises(CharDividesNError):
        primitive_root_of_unity(6, 3)
    with pytest.raises(CharDividesNError):
        primitive_root_of_unity(4, 2)


def test_root_of_unity_in_requires_divisibility():
    with pytest.raises(ValueError):
        root_of_unity_in(F5, 3)  # 3 does not divide 4


def test_no_embedding_between_unrelated_fields():
    with pytest.raises(NoEmbeddingError):
        G9.embed_raw(F5, 1)
    with pytest.raises(NoEmbeddingError):
        F3.embed_raw(F5, 1)
