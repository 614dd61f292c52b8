import itertools
import random

import pytest

from cartier3 import (
    Poly,
    chunk_ranges,
    enumerate_monic,
    is_cubefree,
    is_squarefree,
    monic_from_code,
    squarefree_decompose,
)
from cartier3.census import count_polynomials
from cartier3.poly import NEG_INF

from factoring import is_cubefree_oracle, is_squarefree_oracle


def P(field, ints):
    return Poly.from_int_coeffs(field, ints)


def all_polys(field, max_deg):
    yield Poly.zero(field)
    for d in range(max_deg + 1):
        for top in range(1, field.q):
            for low in itertools.product(range(field.q), repeat=d):
                yield Poly(field, list(low) + [top])


def test_degree_conventions(f3):
    assert Poly.zero(f3).degree == NEG_INF
    assert Poly.one(f3).degree == 0
    assert Poly.x(f3).degree == 1
    assert Poly(f3, [1, 0, 0]).coeffs == (1,)  # trailing zeros stripped


def test_characteristic_3_product(f3):
    # (X^2+1)(X^2+2) = X^4 + 2 since 3X^2 vanishes
    assert P(f3, [1, 0, 1]) * P(f3, [2, 0, 1]) == P(f3, [2, 0, 0, 0, 1])


def test_ring_axioms_exhaustive_gf3(f3):
    polys = list(all_polys(f3, 2))
    for a in polys:
        for b in polys:
            assert a + b == b + a
            assert a * b == b * a
    rng = random.Random(1)
    for _ in range(300):
        a, b, c = (rng.choice(polys) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_ring_axioms_sampled_gf9(f9):
    rng = random.Random(2)

    def rand_poly():
        return Poly(f9, [rng.randrange(9) for _ in range(rng.randrange(6))])

    for _ in range(400):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        assert (a + b) * c == a * c + b * c
        assert (a - b) + b == a


def test_divmod_multiply_back(f3, f9):
    a = P(f3, [0, 1, 0, 0, 0, 1])  # X^5 + X
    b = P(f3, [1, 0, 1])  # X^2 + 1
    quo, rem = divmod(a, b)
    assert rem.degree < b.degree
    assert b * quo + rem == a
    rng = random.Random(3)
    for _ in range(200):
        a = Poly(f9, [rng.randrange(9) for _ in range(rng.randrange(8))])
        b = Poly(f9, [rng.randrange(9) for _ in range(rng.randrange(5))])
        if b.is_zero():
            with pytest.raises(ZeroDivisionError):
                divmod(a, b)
            continue
        quo, rem = divmod(a, b)
        assert b * quo + rem == a
        assert rem.degree < b.degree


def test_gcd_basics(f3):
    f = P(f3, [0, -1, 0, 1])  # X^3 - X
    assert f.derivative() == P(f3, [2])  # -1
    assert f.gcd(f.derivative()).degree == 0
    z = Poly.zero(f3)
    assert z.gcd(z) == z
    g = P(f3, [0, 2]).gcd(P(f3, [0, 1]))
    assert g == Poly.x(f3)  # gcd is monic


def test_derivative_examples(f3):
    assert P(f3, [0, 0, 0, 1]).derivative().is_zero()  # d(X^3) = 0
    assert P(f3, [0, 0, 1, 0, 1]).derivative() == P(f3, [0, 2, 0, 1])  # X^4+X^2


def test_squarefree_examples(f3):
    assert is_squarefree(P(f3, [0, -1, 0, 1]))
    f = P(f3, [0, -1, 0, 1]) * P(f3, [2, 1, 1]) * P(f3, [2, 1, 1])
    assert not is_squarefree(f)
    assert not is_squarefree(P(f3, [0, 0, 0, 1]))  # X^3 is a cube
    with pytest.raises(ValueError):
        is_squarefree(Poly.zero(f3))


def test_cubefree_examples(f3):
    f = P(f3, [0, -1, 0, 1]) * P(f3, [2, 1, 1]) * P(f3, [2, 1, 1])
    assert is_cubefree(f)
    assert not is_cubefree(P(f3, [0, 0, 0, 1]) * P(f3, [1, 1]))  # X^3 (X+1)
    with pytest.raises(ValueError):
        is_cubefree(Poly.zero(f3))


def test_squarefree_cubefree_against_factor_oracle(f3, f9):
    for d in range(1, 7):
        for f in enumerate_monic(f3, d):
            assert is_squarefree(f) == is_squarefree_oracle(f)
            assert is_cubefree(f) == is_cubefree_oracle(f)
    for d in range(1, 4):
        for f in enumerate_monic(f9, d):
            assert is_squarefree(f) == is_squarefree_oracle(f)
            assert is_cubefree(f) == is_cubefree_oracle(f)


def test_squarefree_counts(f3, f9):
    # classical count q^d - q^(d-1) for d >= 2
    for d in range(2, 7):
        n = sum(1 for f in enumerate_monic(f3, d) if is_squarefree(f))
        assert n == 3**d - 3 ** (d - 1)
    for d in range(2, 7):
        assert count_polynomials(f9, d)[1] == 9**d - 9 ** (d - 1)


def test_squarefree_decompose_known_pair(f3):
    f1 = P(f3, [0, -1, 0, 1])
    f2 = P(f3, [2, 1, 1])
    g1, g2 = squarefree_decompose(f1 * f2 * f2)
    assert (g1, g2) == (f1, f2)
    g1, g2 = squarefree_decompose(f1)
    assert g1 == f1 and g2 == Poly.one(f3)


def test_squarefree_decompose_exhaustive(f3):
    for d in range(1, 7):
        for f in enumerate_monic(f3, d):
            if not is_cubefree(f):
                with pytest.raises(ValueError):
                    squarefree_decompose(f)
                continue
            f1, f2 = squarefree_decompose(f)
            assert f1 * f2 * f2 == f
            assert f1.is_monic() and f2.is_monic()
            assert is_squarefree(f1) and is_squarefree(f2)
            assert f1.gcd(f2).degree == 0


def test_enumerate_monic(f3, f9):
    assert list(enumerate_monic(f3, 0)) == [Poly.one(f3)]
    cubics = list(enumerate_monic(f3, 3))
    assert len(cubics) == 27
    assert cubics[0] == P(f3, [0, 0, 0, 1])
    assert cubics[1] == P(f3, [1, 0, 0, 1])  # low-degree coefficient fastest
    quads = list(enumerate_monic(f9, 2))
    assert len(set(quads)) == 81


def test_enumeration_chunks_cover(f3):
    d = 3
    whole = list(enumerate_monic(f3, d))
    pieces = []
    for start, stop in chunk_ranges(3**d, 4):
        pieces.extend(enumerate_monic(f3, d, start, stop))
    assert pieces == whole
    assert [monic_from_code(f3, d, i) for i in range(27)] == whole


def test_text_roundtrip(f3, f9):
    f = P(f3, [0, -1, 0, 1])
    assert f.to_text() == "0,2,0,1"
    assert Poly.from_text(f3, "0,2,0,1") == f
    assert Poly.zero(f3).to_text() == "0"
    assert Poly.from_text(f3, "0") == Poly.zero(f3)
    for f in enumerate_monic(f3, 3):
        assert Poly.from_text(f3, f.to_text()) == f
    rng = random.Random(4)
    for _ in range(100):
        f = Poly(f9, [rng.randrange(9) for _ in range(rng.randrange(7))])
        assert Poly.from_text(f9, f.to_text()) == f
