import pytest

from cartier3 import (
    Field,
    Poly,
    a_number_fundeq,
    a_number_height,
    a_number_kernel,
    a_number_report,
    cartier_matrix,
    cube_parts,
    enumerate_monic,
    is_cubefree,
)


def P(field, ints):
    return Poly.from_int_coeffs(field, ints)


@pytest.fixture(scope="module")
def worked_examples(f3):
    f_a = P(f3, [0, -1, 0, 1])  # X^3 - X
    f_b = f_a * P(f3, [2, 1, 1]) * P(f3, [2, 1, 1])
    return f_a, f_b


def test_cube_parts_worked_examples(f3, worked_examples):
    f_a, f_b = worked_examples
    ca = cube_parts(f_a)
    assert (ca.c0, ca.c1, ca.c2) == (Poly.x(f3), P(f3, [2]), Poly.zero(f3))
    cb = cube_parts(f_b)
    assert cb.c0 == P(f3, [0, 2, 2])
    assert cb.c1 == P(f3, [2, 2, 1])
    assert cb.c2 == P(f3, [2, 1])


def test_cube_parts_recompose_exhaustive(f3):
    for d in range(0, 8):
        for f in enumerate_monic(f3, d):
            c = cube_parts(f)  # construction asserts recomposition
            for i, part in enumerate((c.c0, c.c1, c.c2)):
                assert 3 * part.degree + i <= max(d, 0) or part.is_zero()


def test_cube_parts_requires_characteristic_3(f2):
    with pytest.raises(ValueError):
        cube_parts(Poly.x(f2))


def test_cartier_matrix_worked_examples(f3, worked_examples):
    f_a, f_b = worked_examples
    m = cartier_matrix(f_a, 1)
    assert m.entries == ((0,),)
    assert m.rank() == 0
    m = cartier_matrix(f_b, 3)
    # images: (X+2)w, (X^2+2X+2)w, (2X^2+2X)w as columns
    assert m.entries == ((2, 2, 0), (1, 2, 2), (0, 1, 2))
    assert m.rank() == 2


def test_cartier_matrix_rejects_bad_inputs(f3):
    with pytest.raises(ValueError):
        cartier_matrix(P(f3, [0, 0, 0, 1]), 1)  # X^3 is not cubefree
    with pytest.raises(ValueError):
        cartier_matrix(P(f3, [0, -1, 0, 1]), 2)  # degree/genus mismatch
    with pytest.raises(ValueError):
        cartier_matrix(P(f3, [0, -1, 0, 1]), 0)


def test_a_number_values(f3, worked_examples):
    f_a, f_b = worked_examples
    assert a_number_kernel(f_a, 1) == 1
    assert a_number_kernel(f_b, 3) == 1
    assert a_number_fundeq(f_a, 1) == 1
    assert a_number_fundeq(f_b, 3) == 1
    ha = a_number_height(f_a, 1)
    assert (ha.a, ha.mu1, ha.exceptional_case) == (1, 0, None)
    assert a_number_height(f_b, 3).a == 1
    # genus zero
    assert a_number_kernel(Poly.x(f3), 0) == 0
    assert a_number_kernel(P(f3, [1, 0, 1]), 0) == 0


def test_exceptional_cases_fire(f3):
    # g = 1 mod 3, eps = 2, witness X^2-part degree hits the minimum
    h = a_number_height(P(f3, [0, 1, 1, 0, 1]), 1)  # X^4 + X^2 + X
    assert (h.a, h.mu1, h.exceptional_case) == (0, 0, 1)
    # g = 1 mod 3, eps = 1
    h = a_number_height(P(f3, [0, 0, 1, 1]), 1)  # X^3 + X^2
    assert (h.a, h.mu1, h.exceptional_case) == (0, 0, 2)
    # g = 2 mod 3, eps = 1
    h = a_number_height(P(f3, [0, 1, 0, 0, 0, 1]), 2)  # X^5 + X
    assert (h.a, h.mu1, h.exceptional_case) == (0, 0, 3)
    # same shape but no case fires
    h = a_number_height(P(f3, [1, 0, 0, 0, 1, 1]), 2)  # X^5 + X^4 + 1
    assert (h.a, h.mu1, h.exceptional_case) == (1, 0, None)


def test_matrix_columns_match_action_rules(f3):
    """Column j must be X^(j div 3) times the (2 - j mod 3)-th cube part,
    recomputed here by plain polynomial shifting."""
    for f, g in _cubefree_range(f3, 7):
        if g == 0:
            continue
        m = cartier_matrix(f, g)
        c = cube_parts(f)
        parts = (c.c2, c.c1, c.c0)
        for j in range(g):
            img = parts[j % 3].shift(j // 3)
            expected = [img.coeffs[i] if i < len(img.coeffs) else 0 for i in range(g)]
            assert [m.entries[i][j] for i in range(g)] == expected


def test_report_asserts_agreement(f3, worked_examples):
    f_a, _ = worked_examples
    rep = a_number_report(f_a, 1)
    assert rep.a == rep.a_kernel == rep.a_fundeq == rep.a_height == 1


def _cubefree_range(field, dmax):
    for d in range(1, dmax + 1):
        g = (d - 1) // 2
        for f in enumerate_monic(field, d):
            if is_cubefree(f):
                yield f, g


def test_three_oracles_agree_small(f3, f9):
    for f, g in _cubefree_range(f3, 5):
        rep = a_number_report(f, g)
        assert 0 <= rep.a <= g
    for f, g in _cubefree_range(f9, 3):
        a_number_report(f, g)


def test_complement_height_case_structure(f3):
    """The height of the cube-part triple follows the residue of the
    degree mod 3, with the stated strict dominances."""
    for f, g in _cubefree_range(f3, 6):
        if g == 0:
            continue
        c = cube_parts(f)
        degs = [c.c0.degree, c.c1.degree, c.c2.degree]
        h = max(degs)
        d = int(f.degree)
        r = d % 3
        if r == 0:
            assert h == d // 3 == degs[0] > max(degs[1], degs[2])
        elif r == 1:
            assert h == (d - 1) // 3 == degs[1] > degs[2]
        else:
            assert h == (d - 2) // 3 == degs[2]


def test_twist_invariance(f3):
    for f, g in _cubefree_range(f3, 6):
        for alpha in (2,):
            twisted = f.scale(alpha)
            assert a_number_kernel(twisted, g) == a_number_kernel(f, g)


def test_range_bound(f9):
    for f, g in _cubefree_range(f9, 4):
        a = a_number_kernel(f, g)
        assert 0 <= a <= g


def test_non_cubefree_rejected_by_all_oracles(f3):
    f = P(f3, [0, 0, 0, 1]) * P(f3, [1, 1])  # X^3 (X+1), degree 4
    for oracle in (a_number_kernel, a_number_fundeq):
        with pytest.raises(ValueError):
            oracle(f, 1)
    with pytest.raises(ValueError):
        a_number_height(f, 1)
