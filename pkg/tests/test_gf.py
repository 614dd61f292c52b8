import random

import pytest

from cartier3 import Field, field_new
from cartier3.poly import Poly


def test_prime_field_basics(f3):
    two = f3(2)
    assert (two * two).index == 1  # inv(2) = 2 in GF(3)
    assert two.inverse() == two
    assert (f3(1) + f3(2)).index == 0


def test_non_prime_characteristic_rejected():
    with pytest.raises(ValueError):
        Field(4, 1)
    with pytest.raises(ValueError):
        Field(1, 1)


def test_unsupported_size_rejected():
    with pytest.raises(ValueError):
        Field(2, 11)  # 2048 exceeds the table bound
    with pytest.raises(ValueError):
        Field(3, 0)


def test_gf9_modulus_is_lex_least_irreducible(f3, f9):
    # brute force: a monic quadratic over GF(3) is irreducible iff it has
    # no root
    irreducible = []
    for c0 in range(3):
        for c1 in range(3):
            f = Poly(f3, [c0, c1, 1])
            if all(f.evaluate(x).index != 0 for x in range(3)):
                irreducible.append((c0, c1))
    assert min(irreducible) == f9.modulus[:2]
    assert f9.modulus == (1, 0, 1)  # X^2 + 1


def test_construction_determinism():
    a = field_new(3, 2)
    b = field_new(3, 2)
    assert a.modulus == b.modulus
    assert [e.index for e in a.elements()] == [e.index for e in b.elements()]
    assert a == b


def test_enumerate_elements(f3, f9):
    e3 = list(f3.elements())
    assert len(e3) == 3 and e3[0].index == 0
    e9 = list(f9.elements())
    assert len(set(e.index for e in e9)) == 9
    f25 = Field(5, 2)
    e25 = [e.index for e in f25.elements()]
    assert len(set(e25)) == 25


def test_inverse_exhaustive_gf9(f9):
    one = f9.one()
    for a in f9.elements():
        if a.index == 0:
            with pytest.raises(ZeroDivisionError):
                a.inverse()
        else:
            assert a.inverse() * a == one


@pytest.mark.parametrize("pk", [(2, 1), (3, 1), (2, 2), (3, 2)])
def test_field_axioms_exhaustive_small(pk):
    field = Field(*pk)
    els = list(field.elements())
    for a in els:
        for b in els:
            assert a + b == b + a
            assert a * b == b * a
            for c in els:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("pk", [(5, 2), (3, 4)])
def test_field_axioms_sampled(pk):
    field = Field(*pk)
    rng = random.Random(0)
    q = field.q
    for _ in range(1000):
        a, b, c = (field(rng.randrange(q)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a


@pytest.mark.parametrize("pk", [(3, 1), (3, 2), (2, 2), (3, 4), (2, 3)])
def test_frobenius_roundtrip_exhaustive(pk):
    field = Field(*pk)
    p = field.p
    for a in field.elements():
        assert (a**p).pth_root() == a
        assert a.pth_root() ** p == a


def test_pth_root_prime_field_is_identity(f3):
    assert f3(2).pth_root() == f3(2)
    assert f3(0).pth_root() == f3(0)


def test_coords_roundtrip(f9):
    for a in f9.elements():
        assert f9.element(a.coords) == a
    assert f9((2, 1)).index == 2 + 3 * 1


def test_mixed_field_operations_rejected(f3, f9):
    with pytest.raises((ValueError, TypeError)):
        f3(1) + f9(1)


def test_element_pow(f9):
    for a in f9.elements():
        if a.index:
            assert a ** (f9.q - 1) == f9.one()
            assert a**-1 == a.inverse()
