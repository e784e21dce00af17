import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polystego.gf2poly import Gf2Poly, add, degree, divmod_poly, mul, quotient, rem, shift
from reference import naive_divmod, naive_mul, naive_rem

P = Gf2Poly.from_exponents
polys = st.integers(min_value=0, max_value=(1 << 300) - 1).map(Gf2Poly)
nonzero = st.integers(min_value=1, max_value=(1 << 120) - 1).map(Gf2Poly)


def test_add_examples():
    assert add(P([0, 2]), P([0, 2])) == Gf2Poly(0)
    assert add(P([0, 2, 6, 8, 9]), P([0, 2])) == P([6, 8, 9])
    assert add(P([0, 1]), P([1, 3])) == P([0, 3])


def test_mul_examples():
    assert mul(P([2]), P([0, 3])) == P([2, 5])
    assert mul(P([0, 5, 7]), Gf2Poly(0)) == Gf2Poly(0)
    assert mul(P([0, 1]), P([0, 1])) == P([0, 2])


def test_shift_examples():
    assert shift(P([0, 1]), 2) == P([2, 3])
    p = P([1, 4, 9])
    assert shift(p, 0) == p
    assert shift(P([2]), 6) == P([8]) == mul(P([2]), P([6]))
    with pytest.raises(ValueError):
        shift(p, -1)


def test_rem_examples():
    g = P([0, 3])
    assert rem(P([6, 8, 9]), g) == P([2])
    assert rem(P([0, 2, 6, 9]), g) == P([0, 2])
    assert rem(P([0, 1]), g) == P([0, 1])
    assert rem(Gf2Poly(0), g) == Gf2Poly(0)
    with pytest.raises(ZeroDivisionError):
        rem(P([1]), Gf2Poly(0))


def test_degree():
    assert degree(P([0, 3])) == 3
    assert degree(Gf2Poly(0)) is None
    assert degree(P([8])) == 8


def test_equality_ignores_construction_padding():
    assert Gf2Poly.from_coeffs([1, 0, 1, 0, 0, 0]) == Gf2Poly.from_coeffs([1, 0, 1])
    assert Gf2Poly.from_coeffs([0, 0, 0]).degree is None


def test_text_round_trip_and_errors():
    assert Gf2Poly.from_text("0 3") == P([0, 3])
    assert P([0, 3]).to_text() == "0 3"
    assert Gf2Poly.from_text("").to_text() == ""
    with pytest.raises(ValueError, match="duplicate"):
        Gf2Poly.from_text("0 3 3")
    with pytest.raises(ValueError, match="descending"):
        Gf2Poly.from_text("3 0")
    with pytest.raises(ValueError, match="negative"):
        Gf2Poly.from_text("-1 2")
    with pytest.raises(ValueError, match="integer"):
        Gf2Poly.from_text("0 x")


def test_str_and_operators():
    assert str(P([0, 1, 5])) == "1 + x + x^5"
    assert str(Gf2Poly(0)) == "0"
    a, g = P([0, 4, 7]), P([0, 1, 3])
    assert a % g == rem(a, g)
    assert a // g == quotient(a, g)
    assert divmod(a, g) == divmod_poly(a, g)
    assert a - g == a + g
    assert a << 3 == shift(a, 3)


def test_coeffs_padding():
    assert P([0, 2]).coeffs(5).tolist() == [1, 0, 1, 0, 0]
    with pytest.raises(ValueError):
        P([6]).coeffs(5)


@given(polys, polys, polys)
def test_add_is_associative_commutative_self_inverse(a, b, c):
    assert add(add(a, b), c) == add(a, add(b, c))
    assert add(a, b) == add(b, a)
    assert add(a, a) == Gf2Poly(0)


@given(polys, polys, polys)
@settings(max_examples=50)
def test_mul_distributes(a, b, c):
    assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))


@given(st.integers(1, (1 << 80) - 1), st.integers(1, (1 << 80) - 1))
@settings(max_examples=60)
def test_mul_matches_naive_and_degrees_add(a, b):
    prod = mul(Gf2Poly(a), Gf2Poly(b))
    assert prod.bits == naive_mul(a, b)
    assert prod.degree == Gf2Poly(a).degree + Gf2Poly(b).degree


@given(polys, nonzero)
def test_division_identity(a, g):
    q, r = divmod_poly(a, g)
    assert add(mul(q, g), r) == a
    assert r.degree is None or r.degree < g.degree
    assert rem(a, g) == r


@given(polys, nonzero, polys)
def test_remainder_reduction(a, g, b):
    assert rem(add(mul(g, b), a), g) == rem(a, g)


def _sparse_generator(rng, d):
    # exercises the block-division path: few low terms below a high leading term
    low = rng.sample(range(d // 3 + 1), k=min(3, d // 3 + 1))
    return Gf2Poly.from_exponents(set(low) | {d})


@pytest.mark.parametrize("seed", range(4))
def test_rem_matches_naive_divider_large(seed):
    rng = random.Random(seed)
    deg_a = rng.randint(2000, 10_000)
    a = rng.getrandbits(deg_a) | (1 << deg_a)
    d = rng.randint(1, 1500)
    dense = rng.getrandbits(d) | (1 << d)
    sparse = _sparse_generator(rng, d)
    lcdm = (1 << d) | 1
    for g in (dense, sparse.bits, lcdm, 1 << d):
        assert rem(Gf2Poly(a), Gf2Poly(g)).bits == naive_rem(a, g)


def test_rem_matches_naive_divider_small_random():
    rng = random.Random(7)
    for _ in range(2000):
        a = rng.getrandbits(rng.randint(0, 200))
        g = rng.getrandbits(rng.randint(1, 60)) or 1
        assert rem(Gf2Poly(a), Gf2Poly(g)).bits == naive_rem(a, g)
        assert quotient(Gf2Poly(a), Gf2Poly(g)).bits == naive_divmod(a, g)[0]
