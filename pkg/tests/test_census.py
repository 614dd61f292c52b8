from fractions import Fraction

import pytest

from cartier3 import (
    BudgetError,
    Field,
    conjecture_report,
    cubefree_count_formula,
    heuristic_nu,
    intrinsic_cardinality,
    mu_closed_form,
    nu_closed_form,
    run_census,
    squarefree_count_formula,
    verify_corollaries,
    verify_pcounting,
    verify_distribution,
)
from cartier3.census import count_polynomials
import cartier3.census as census_mod


def test_genus_zero_census(f3, caches):
    for eps in (1, 2):
        t = run_census(f3, 0, eps, cache=caches["census"])
        assert t.counts == {0: t.total}
        assert t.mu(0) == 1
        assert t.total == 3**eps  # every monic polynomial of degree < 3


def test_genus_one_census_values(f3, caches):
    t = run_census(f3, 1, 1, cache=caches["census"])
    assert (t.mu(0), t.mu(1)) == (Fraction(3, 4), Fraction(1, 4))
    ts = run_census(f3, 1, 1, squarefree=True, cache=caches["census"])
    assert ts.total == 18
    assert ts.counts[1] == 6
    assert ts.mu(1) == Fraction(1, 3)


def test_census_requires_characteristic_3(f2):
    with pytest.raises(ValueError, match="characteristic-3"):
        run_census(f2, 1, 1)


def test_census_budget(f3):
    with pytest.raises(BudgetError):
        run_census(f3, 5, 2, budget=10)


def test_probabilities_sum_to_one(f3, f9, caches):
    for field, g, eps in ((f3, 3, 1), (f3, 4, 2), (f9, 1, 2)):
        for sf in (False, True):
            t = run_census(field, g, eps, squarefree=sf, cache=caches["census"])
            assert sum(t.probabilities.values()) == 1


def test_closed_form_spot_values():
    q = 3
    assert mu_closed_form(q, 3, 1, 0)[0] == Fraction(2, 3)
    assert mu_closed_form(q, 3, 1, 1)[0] == Fraction(1, 3)
    assert mu_closed_form(q, 4, 1, 2)[0] == Fraction(1, 36)
    assert mu_closed_form(q, 1, 1, 0)[0] == Fraction(3, 4)
    assert mu_closed_form(q, 0, 2, 0)[0] == 1
    # branch labels travel with the values
    assert "a=[(g-1)/3]+1" in mu_closed_form(q, 4, 1, 2)[1]


def test_distribution_small_grid(f3, caches):
    for g in range(4):
        for eps in (1, 2):
            t = run_census(f3, g, eps, cache=caches["census"])
            comps = verify_distribution(t)
            assert len(comps) == g + 1
            assert all(c.equal for c in comps), [c for c in comps if not c.equal]


def test_distribution_rejects_squarefree_table(f3, caches):
    t = run_census(f3, 1, 1, squarefree=True, cache=caches["census"])
    with pytest.raises(ValueError):
        verify_distribution(t)


def test_corollaries_g1_g4(f3, caches):
    for g in (1, 4):
        for eps in (1, 2):
            cf = run_census(f3, g, eps, cache=caches["census"])
            sf = run_census(f3, g, eps, squarefree=True, cache=caches["census"])
            comps = verify_corollaries(cf, sf)
            assert all(c.equal for c in comps), [c for c in comps if not c.equal]


def test_top_value_erratum_is_visible(f3, caches):
    """Both parities give q^(1-2a) at the top a-number; the (1+1/q)-scaled
    variant that sometimes circulates does not match enumeration."""
    q = Fraction(3)
    sf = run_census(f3, 1, 2, squarefree=True, cache=caches["census"])
    assert sf.mu(1) == q**-1 == Fraction(1, 3)
    assert sf.mu(1) != q**-1 * (1 + 1 / q)
    sf4 = run_census(f3, 4, 2, squarefree=True, cache=caches["census"])
    assert sf4.mu(2) == q**-3 == Fraction(1, 27)
    assert sf4.mu(2) != q**-3 * (1 + 1 / q)


def test_top_witness_exists_g4(f3, caches):
    # degree 9 and degree 10 squarefree polynomials with a-number 2
    for eps in (1, 2):
        sf = run_census(f3, 4, eps, squarefree=True, cache=caches["census"])
        assert sf.counts[2] > 0
        assert sf.counts.get(3, 0) == 0 and sf.counts.get(4, 0) == 0


def test_pcounting_including_corrected_g0(f3, f9, caches):
    for field in (f3, f9):
        for g in range(3):
            for eps in (1, 2):
                comps = verify_pcounting(field, g, eps, cache=caches["counts"])
                assert all(c.equal for c in comps), comps
    assert cubefree_count_formula(3, 0, 2) == 9  # all monic quadratics
    assert squarefree_count_formula(3, 0, 1) == 3
    assert squarefree_count_formula(3, 0, 2) == 6


def test_count_polynomials_splitting_route(f9, caches):
    direct = {d: count_polynomials(f9, d, cache=caches["counts"]) for d in range(9)}
    old = census_mod.MAX_DIRECT_COUNT
    census_mod.MAX_DIRECT_COUNT = 9**4
    try:
        for d in range(5, 9):
            assert count_polynomials(f9, d, cache={}) == direct[d]
    finally:
        census_mod.MAX_DIRECT_COUNT = old


def test_heuristic_nu_values(f3, caches):
    vals, comps = heuristic_nu(f3, 0, cache=caches["sweep"])
    assert vals == {0: Fraction(1)}
    assert all(c.equal for c in comps)
    vals, comps = heuristic_nu(f3, 1, cache=caches["sweep"])
    assert vals[1] == Fraction(1, 3)
    assert all(c.equal for c in comps)
    vals, comps = heuristic_nu(f3, 2, cache=caches["sweep"])
    assert vals[1] == Fraction(8, 27)
    assert nu_closed_form(3, 2, 1) == Fraction(8, 27)
    assert all(c.equal for c in comps)


def test_intrinsic_cardinality_g1_frozen(f3, caches):
    rep = intrinsic_cardinality(f3, 1, cache=caches["census"])
    assert rep.values == {0: Fraction(2), 1: Fraction(1)}
    assert all(c.equal for c in rep.comparisons)


def test_intrinsic_cardinality_windows(f3, caches):
    for g in (1, 2, 3):
        rep = intrinsic_cardinality(f3, g, cache=caches["census"])
        assert all(c.equal for c in rep.comparisons), [
            c for c in rep.comparisons if not c.equal
        ]
        for a, v in rep.values.items():
            if a > -(-g // 3):
                assert v == 0


def test_conjecture_report_is_observational(f3, caches):
    rows = conjecture_report(f3, [1, 2, 3], 1, cache=caches["census"])
    assert {r["g"] for r in rows} == {1, 2, 3}
    a0 = [r for r in rows if r["a"] == 0]
    assert all(r["limit"] == Fraction(2, 3) for r in a0)
    a1 = [r for r in rows if r["a"] == 1]
    assert all(r["limit"] == Fraction(8, 27) for r in a1)
    for r in rows:
        assert set(r) == {"g", "a", "measured", "limit"}  # no verdict field


def test_census_against_python_oracles(f3, f9, caches):
    """The compiled census agrees with a per-polynomial run of the three
    plain-Python oracles (which assert their own mutual agreement)."""
    from cartier3 import a_number_report, enumerate_monic, is_cubefree, is_squarefree

    for field, d in ((f3, 5), (f9, 3)):
        g = (d - 1) // 2
        eps = d - 2 * g
        cf_counts, sf_counts = {}, {}
        for f in enumerate_monic(field, d):
            if not is_cubefree(f):
                continue
            a = a_number_report(f, g).a
            cf_counts[a] = cf_counts.get(a, 0) + 1
            if is_squarefree(f):
                sf_counts[a] = sf_counts.get(a, 0) + 1
        cf = run_census(field, g, eps, cache=caches["census"])
        sf = run_census(field, g, eps, squarefree=True, cache=caches["census"])
        assert {a: c for a, c in cf.counts.items() if c} == cf_counts
        assert {a: c for a, c in sf.counts.items() if c} == sf_counts


def test_census_worker_invariance(f3):
    t1 = run_census(f3, 2, 1, workers=1)
    t2 = run_census(f3, 2, 1, workers=3)
    t8 = run_census(f3, 2, 1, workers=8)
    assert t1.counts == t2.counts == t8.counts
    assert t1.total == t2.total == t8.total
