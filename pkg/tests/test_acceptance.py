"""Acceptance suite: every exit criterion at its stated grid.

All comparisons are exact (integer or rational equality, exact
inequalities); nothing is checked to a tolerance.  One PASS/FAIL line is
printed per criterion.
"""

import time
from fractions import Fraction

from cartier3 import Field, run_census, serialize, verify
from cartier3 import census as cz
from cartier3 import heights as hs
from cartier3._kernels import cross_oracle_chunk, minkowski_chunk, run_chunked

F3 = Field(3, 1)
F9 = Field(3, 2)


def _report(name, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'} {name}" + (f" [{detail}]" if detail else ""))
    assert ok, f"{name} {detail}"


def test_criterion_01_exact_distribution_q3(caches):
    t0 = time.time()
    failures = []
    for g in range(6):
        for eps in (1, 2):
            table = run_census(F3, g, eps, cache=caches["census"])
            failures += [c for c in cz.verify_distribution(table) if not c.equal]
    _report(
        "criterion-01 exact distribution, q=3, g<=5, both parities",
        not failures and time.time() - t0 <= 120,
        f"{time.time() - t0:.1f}s, {len(failures)} violations",
    )


def test_criterion_02_exact_distribution_q9(caches):
    t0 = time.time()
    failures = []
    for g in range(3):
        for eps in (1, 2):
            table = run_census(F9, g, eps, cache=caches["census"])
            failures += [c for c in cz.verify_distribution(table) if not c.equal]
    _report(
        "criterion-02 exact distribution, q=9, g<=2",
        not failures and time.time() - t0 <= 120,
        f"{time.time() - t0:.1f}s, {len(failures)} violations",
    )


def test_criterion_03_squarefree_exact_values(caches):
    failures = []
    for g in (1, 4):
        for eps in (1, 2):
            cf = run_census(F3, g, eps, cache=caches["census"])
            sf = run_census(F3, g, eps, squarefree=True, cache=caches["census"])
            comps = cz.verify_corollaries(cf, sf)
            failures += [
                c for c in comps
                if not c.equal and c.case.split("[")[0] in ("vanishing", "top-value")
            ]
    # the top value is q^(1-2a) for BOTH parities (see the ledger erratum);
    # pin that the (1+1/q)-scaled variant disagrees with enumeration
    sf = run_census(F3, 4, 2, squarefree=True, cache=caches["census"])
    q = Fraction(3)
    ok = sf.mu(2) == q**-3 and sf.mu(2) != q**-3 * (1 + 1 / q)
    _report("criterion-03 squarefree vanishing and top values, g in {1,4}",
            not failures and ok)


def test_criterion_04_squarefree_bounds(caches):
    failures = []
    for field, gmax in ((F3, 5), (F9, 2)):
        for g in range(gmax + 1):
            for eps in (1, 2):
                cf = run_census(field, g, eps, cache=caches["census"])
                sf = run_census(field, g, eps, squarefree=True, cache=caches["census"])
                comps = cz.verify_corollaries(cf, sf)
                failures += [
                    c for c in comps
                    if not c.equal and c.case.split("[")[0] in ("sandwich", "strict-band")
                ]
    _report("criterion-04 squarefree sandwich and strict band", not failures)


def test_criterion_05_top_witnesses(caches):
    t0 = time.time()
    ok = True
    for eps in (1, 2):
        sf = run_census(F3, 4, eps, squarefree=True, cache=caches["census"])
        ok = ok and sf.counts.get(2, 0) > 0
    _report(
        "criterion-05 a-number 2 witnesses at q=3, g=4, both degrees",
        ok and time.time() - t0 <= 30,
        f"{time.time() - t0:.1f}s",
    )


def test_criterion_06_oracle_agreement():
    mismatches = 0
    checked = 0
    for field, dmax in ((F3, 8), (F9, 5)):
        tabs = field.np_tables()
        for d in range(1, dmax + 1):
            g = (d - 1) // 2
            eps = d - 2 * g
            parts = run_chunked(
                cross_oracle_chunk, (field.q, d, g, eps, *tabs), field.q**d, 1
            )
            checked += int(parts[0][0])
            mismatches += int(parts[0][1])
    _report(
        "criterion-06 kernel/constraint/height oracles agree",
        mismatches == 0,
        f"{checked} cubefree inputs",
    )


def test_criterion_07_parameter_set_cardinalities(caches):
    failures = []
    for field in (F3, F9):
        for g in range(5):
            for eps in (1, 2):
                comps = cz.verify_pcounting(field, g, eps, cache=caches["counts"])
                failures += [c for c in comps if not c.equal]
    _report("criterion-07 cubefree/squarefree cardinalities, q in {3,9}, g<=4",
            not failures, f"{len(failures)} violations")


def test_criterion_08_height_counting_closed_forms(caches):
    t0 = time.time()
    res = verify.check_heights(
        (2, 3), 4, 1, [(2, 4, 2)], 1, hs.DEFAULT_BUDGET, caches["sweep"],
        lines_qs=(2, 3, 5), kmax=2,
    )
    _report(
        "criterion-08 line/plane/triple counting closed forms",
        res.passed and time.time() - t0 <= 300,
        f"{time.time() - t0:.1f}s, {res.comparisons} cells",
    )


def test_criterion_09_minkowski_identity():
    ok = True
    total = 0
    for q in (2, 3):
        field = Field(q, 1)
        add, neg, mul, inv, _ = field.np_tables()
        parts = run_chunked(
            minkowski_chunk, (q, 3, add, neg, mul, inv), q ** (3 * 4), 1
        )
        total += int(parts[0][0])
        ok = ok and int(parts[0][1]) == 0 and int(parts[0][2]) == 0
    _report("criterion-09 first+second minima sum to the height",
            ok, f"{total} coprime triples")


def test_criterion_10_height_model_exact(caches):
    failures = []
    for q in (2, 3):
        field = Field(q, 1)
        for j in range(3):
            _, comps = cz.heuristic_nu(field, j, cache=caches["sweep"])
            failures += [c for c in comps if not c.equal]
    _report("criterion-10 height-model probabilities exact", not failures)


def test_criterion_11_stratum_weighted_counts(caches):
    failures = []
    for g in (1, 2, 3):
        rep = cz.intrinsic_cardinality(F3, g, cache=caches["census"])
        failures += [c for c in rep.comparisons if not c.equal]
    _report("criterion-11 stratum weighted counts: dual route, vanishing, "
            "leading order", not failures)


def test_criterion_12_worker_determinism():
    blobs = []
    for w in (1, 2, 8):
        matrix = verify.run_full(workers=w)
        assert matrix["all_passed"], matrix
        blobs.append(serialize.canonical_json_bytes(matrix))
    _report("criterion-12 verification output byte-identical for workers 1/2/8",
            blobs[0] == blobs[1] == blobs[2], f"{len(blobs[0])} bytes")
