"""The one-shot verification suite behind `cartier3 verify`.

Each check runs one family of exact comparisons at its desk-scale grid and
reports a pass/fail verdict with the failing labels (if any).  The matrix
is a pure function of (quick, budget); worker count only partitions the
enumerations, so serialized output is byte-identical for any worker count.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import census as cz
from . import heights as hs
from ._kernels import cross_oracle_chunk, minkowski_chunk, run_chunked
from .gf import Field
from .heights import DEFAULT_BUDGET
from .poly import Poly


@dataclass
class CheckResult:
    name: str
    passed: bool
    comparisons: int
    failures: list
    skipped: list

    def to_json_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "comparisons": self.comparisons,
            "failures": sorted(self.failures),
            "skipped": sorted(self.skipped),
        }


class _Collector:
    def __init__(self, name):
        self.name = name
        self.n = 0
        self.failures = []
        self.skipped = []

    def add(self, comparisons):
        for comp in comparisons:
            self.n += 1
            if not comp.equal:
                self.failures.append(comp.case)

    def add_flag(self, label, ok):
        self.n += 1
        if not ok:
            self.failures.append(label)

    def skip(self, label):
        self.skipped.append(label)

    def result(self):
        return CheckResult(self.name, not self.failures, self.n, self.failures, self.skipped)


def _census_pairs(fields_gmax, workers, budget, cache):
    for field, gmax in fields_gmax:
        for g in range(gmax + 1):
            for eps in (1, 2):
                cf = cz.run_census(field, g, eps, False, workers, budget, cache)
                sf = cz.run_census(field, g, eps, True, workers, budget, cache)
                yield cf, sf


def check_distribution(grid, workers, budget, cache):
    col = _Collector("a-number-distribution-exact")
    for cf, _ in _census_pairs(grid, workers, budget, cache):
        col.add(cz.verify_distribution(cf))
    return col.result()


def check_corollaries(name, grid, workers, budget, cache, kinds):
    col = _Collector(name)
    for cf, sf in _census_pairs(grid, workers, budget, cache):
        comps = cz.verify_corollaries(cf, sf)
        col.add(c for c in comps if c.case.split("[")[0] in kinds)
    return col.result()


def check_cross_oracles(field_dmax, workers, budget):
    col = _Collector("a-number-oracle-agreement")
    for field, dmax in field_dmax:
        tabs = field.np_tables()
        for d in range(1, dmax + 1):
            g = (d - 1) // 2
            eps = d - 2 * g
            total = field.q**d
            hs._check_budget(total, budget, f"oracle sweep deg {d} over GF({field.q})")
            parts = run_chunked(
                cross_oracle_chunk, (field.q, d, g, eps, *tabs), total, workers
            )
            checked = sum(int(p[0]) for p in parts)
            mism = sum(int(p[1]) for p in parts)
            multi = sum(int(p[3]) for p in parts)
            col.add_flag(f"oracles[q={field.q},deg={d}] ({checked} checked)", mism == 0)
            col.add_flag(f"unique-minimal-witness[q={field.q},deg={d}]", multi == 0)
    return col.result()


def check_pcounting(grid, workers, budget, cache):
    col = _Collector("parameter-set-cardinalities")
    for field, gmax in grid:
        for g in range(gmax + 1):
            for eps in (1, 2):
                col.add(cz.verify_pcounting(field, g, eps, workers, budget, cache))
    return col.result()


def _sample_lines(field):
    one, zero, x = Poly.one(field), Poly.zero(field), Poly.x(field)
    x2 = x * x
    return [
        hs.TripleVec(one, zero, zero),
        hs.TripleVec(x, one, zero),
        hs.TripleVec(x2, x, one),
    ]


def check_heights(qs, mmax, lmax, extra_cells, workers, budget, sweep_cache,
                  lines_qs=(2, 3, 5), kmax=2):
    """Closed forms of the counting section: lines, planes over a line, and
    the S/T/T'/N families over the requested grid."""
    col = _Collector("height-counting-closed-forms")
    for q in lines_qs:
        field = Field(q, 1)
        for k in range(kmax + 1):
            rep = hs.count_lines(field, 3, k, workers, budget)
            col.add_flag(f"{rep.label} q={q}", rep.matches)
    for q in qs:
        field = Field(q, 1)
        for W in _sample_lines(field):
            for k in (1, 2):
                rep = hs.count_planes_over_line(W, k, budget)
                col.add_flag(f"{rep.label} q={q} W=({W.a1};{W.a2};{W.a3})", rep.matches)
    cells = []
    for q in qs:
        for m in range(1, mmax + 1):
            for l in range(0, min(lmax, m // 2) + 1):
                cells.append((q, m, l))
    cells.extend(extra_cells)
    all_R = [{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}]
    done_totals = set()
    for q, m, l in cells:
        field = Field(q, 1)
        if (q, m) not in done_totals:
            done_totals.add((q, m))
            rep = hs.count_S(field, m, None, None, workers, budget, sweep_cache)
            col.add_flag(f"{rep.label} q={q}", rep.matches)
            for R in all_R:
                rep = hs.count_S(field, m, None, R, workers, budget, sweep_cache)
                col.add_flag(f"{rep.label} q={q}", rep.matches)
        for R in [None] + all_R:
            rep = hs.count_S(field, m, l, R, workers, budget, sweep_cache)
            col.add_flag(f"{rep.label} q={q}", rep.matches)
        if m > 2 * l:
            for primed in (False, True):
                for R in [None] + all_R:
                    rep = hs.count_T(field, m, l, primed, R, workers, budget, sweep_cache)
                    col.add_flag(f"{rep.label} q={q}", rep.matches)
        else:
            col.skip(f"T(m={m}, l={l}) q={q}: regime rejected")
        for variant in (1, 2, 3):
            primed_opts = (False, True) if m > 2 * l else (False,)
            for primed in primed_opts:
                rep = hs.count_N(field, variant, m, l, primed, workers, budget, sweep_cache)
                col.add_flag(f"{rep.label} q={q}", rep.matches)
    return col.result()


def check_minkowski(qs_h, workers, budget):
    col = _Collector("minkowski-sum-identity")
    for q, hmax in qs_h:
        field = Field(q, 1)
        total = q ** (3 * (hmax + 1))
        hs._check_budget(total, budget, f"minkowski sweep q={q}, h={hmax}")
        add, neg, mul, inv, _ = field.np_tables()
        parts = run_chunked(minkowski_chunk, (q, hmax, add, neg, mul, inv), total, workers)
        checked = sum(int(p[0]) for p in parts)
        viol = sum(int(p[1]) for p in parts)
        bound = sum(int(p[2]) for p in parts)
        col.add_flag(f"mu1+mu2=h[q={q},h<={hmax}] ({checked} triples)", viol == 0)
        col.add_flag(f"mu1<=h/2[q={q},h<={hmax}]", bound == 0)
    return col.result()


def check_heuristic(qs, jmax, workers, budget, sweep_cache):
    col = _Collector("height-model-exact")
    for q in qs:
        field = Field(q, 1)
        for j in range(jmax + 1):
            _, comps = cz.heuristic_nu(field, j, workers, budget, sweep_cache)
            col.add(comps)
    return col.result()


def check_intrinsic(gmax, workers, budget, cache):
    col = _Collector("stratum-weighted-counts")
    field = Field(3, 1)
    for g in range(1, gmax + 1):
        rep = cz.intrinsic_cardinality(field, g, workers, budget, cache)
        col.add(rep.comparisons)
    return col.result()


def run_full(workers: int = 1, budget: int = DEFAULT_BUDGET, quick: bool = False) -> dict:
    """Run every check at its grid; returns the serializable matrix.

    Fresh caches per call: two invocations do the same work, so worker
    determinism is exercised genuinely.
    """
    census_cache: dict = {}
    count_cache: dict = {}
    sweep_cache: dict = {}
    f3 = Field(3, 1)
    f9 = Field(3, 2)
    if quick:
        census_grid = [(f3, 2)]
        oracle_grid = [(f3, 5)]
        pcount_grid = [(f3, 2)]
        heights_qs, heights_m, heights_l, heights_extra = (2,), 3, 1, []
        lines_qs = (2, 3)
        mink = [(2, 2), (3, 2)]
        nu_qs, nu_j = (3,), 1
        ic_g = 1
    else:
        census_grid = [(f3, 5), (f9, 2)]
        oracle_grid = [(f3, 8), (f9, 5)]
        pcount_grid = [(f3, 4), (f9, 4)]
        heights_qs, heights_m, heights_l, heights_extra = (2, 3), 4, 1, [(2, 4, 2)]
        lines_qs = (2, 3, 5)
        mink = [(2, 3), (3, 3)]
        nu_qs, nu_j = (2, 3), 2
        ic_g = 3
    checks = [
        check_distribution(census_grid, workers, budget, census_cache),
        check_corollaries(
            "squarefree-exact-values", census_grid, workers, budget, census_cache,
            kinds={"vanishing", "top-value"},
        ),
        check_corollaries(
            "squarefree-bounds", census_grid, workers, budget, census_cache,
            kinds={"sandwich", "strict-band"},
        ),
        check_corollaries(
            "top-a-number-witnesses", census_grid, workers, budget, census_cache,
            kinds={"top-bound", "top-witness"},
        ),
        check_cross_oracles(oracle_grid, workers, budget),
        check_pcounting(pcount_grid, workers, budget, count_cache),
        check_heights(heights_qs, heights_m, heights_l, heights_extra, workers,
                      budget, sweep_cache, lines_qs=lines_qs),
        check_minkowski(mink, workers, budget),
        check_heuristic(nu_qs, nu_j, workers, budget, sweep_cache),
        check_intrinsic(ic_g, workers, budget, census_cache),
    ]
    return {
        "quick": quick,
        "all_passed": all(c.passed for c in checks),
        "checks": [c.to_json_dict() for c in checks],
    }
