"""Command-line surface: censuses, height counters, verification suites.

Exit codes: 0 all comparisons matched (or nothing to compare), 1 at least
one closed form violated (or invalid arguments), 2 enumeration budget
exceeded.  All file output is byte-stable: sorted JSON keys, integers as
decimal strings, rationals as num/den.
"""

from __future__ import annotations

import argparse
import re
import sys

from . import census as cz
from . import heights as hs
from . import serialize, verify
from .gf import Field
from .heights import DEFAULT_BUDGET, BudgetError, RegimeError

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_BUDGET = 2


def _add_common(p):
    p.add_argument("--p", type=int, default=3, help="field characteristic")
    p.add_argument("--k", type=int, default=1, help="extension degree")
    p.add_argument("--workers", type=int, default=1, help="parallel chunk count")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="work-unit cap per enumeration (default 10^9)")
    p.add_argument("--out", type=str, default=None, help="report file (.json or .csv)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cartier3",
        description="exact a-number censuses and height-counting verification",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("census", help="a-number distribution for one (g, epsilon)")
    _add_common(pc)
    pc.add_argument("--g", type=int, required=True)
    pc.add_argument("--epsilon", type=int, choices=(1, 2), required=True)
    pc.add_argument("--squarefree", action="store_true",
                    help="also census squarefree polynomials and check the corollaries")

    ph = sub.add_parser("heights", help="height-counting closed forms on a grid")
    _add_common(ph)
    ph.add_argument("--grid", type=str, default=None,
                    help="grid spec like 'm<=3,l<=1'")
    ph.add_argument("--include-t", action="store_true",
                    help="also check the solution-profile counts T and T'")
    ph.add_argument("--lines", action="store_true",
                    help="count one-dimensional subspaces instead")
    ph.add_argument("--n", type=int, default=3, help="ambient dimension for --lines")
    ph.add_argument("--kmax", type=int, default=1, help="max height for --lines")

    pv = sub.add_parser("verify", help="run the full verification suite")
    _add_common(pv)
    pv.add_argument("--quick", action="store_true", help="reduced grid (g <= 2, q = 3)")
    pv.add_argument("--json", dest="json_out", type=str, default=None,
                    help="write the matrix as canonical JSON")

    pm = sub.add_parser("moduli", help="stratum weighted point counts")
    _add_common(pm)
    pm.add_argument("--g", type=int, required=True)

    pn = sub.add_parser("nu", help="height-model probabilities")
    _add_common(pn)
    pn.add_argument("--jmax", type=int, default=2)
    return ap


def _field(args) -> Field:
    return Field(args.p, args.k)


def _write_report(args, payload, tables=()):
    if not args.out:
        return
    if args.out.endswith(".csv"):
        if not tables:
            raise ValueError("CSV output is only defined for census tables")
        serialize.write_census_csv(args.out, tables)
    else:
        serialize.write_json(args.out, payload)


def cmd_census(args) -> int:
    if args.p != 3:
        print("error: characteristic-3 required for curve census", file=sys.stderr)
        return EXIT_VIOLATION
    field = _field(args)
    cache: dict = {}
    cf = cz.run_census(field, args.g, args.epsilon, False, args.workers, args.budget, cache)
    comparisons = cz.verify_distribution(cf)
    tables = [cf]
    corollaries = []
    if args.squarefree:
        sf = cz.run_census(field, args.g, args.epsilon, True, args.workers, args.budget, cache)
        tables.append(sf)
        corollaries = cz.verify_corollaries(cf, sf)
    payload = {
        "tables": [t.to_json_dict() for t in tables],
        "distribution": [c.__dict__ for c in comparisons],
        "corollaries": [c.__dict__ for c in corollaries],
    }
    _write_report(args, payload, tables)
    bad = [c for c in comparisons + corollaries if not c.equal]
    for c in bad:
        print(f"VIOLATED {c.case}: expected {c.expected}, measured {c.measured}")
    if not bad:
        for t in tables:
            kind = "squarefree" if t.key.squarefree_only else "cubefree"
            print(f"census q={t.key.q} g={t.key.g} eps={t.key.epsilon} {kind}: "
                  f"total={t.total} all comparisons equal")
    return EXIT_VIOLATION if bad else EXIT_OK


_GRID_RE = re.compile(r"^m<=(\d+),l<=(\d+)$")


def cmd_heights(args) -> int:
    field = _field(args)
    rows = []
    rejected = []
    if args.lines:
        for k in range(args.kmax + 1):
            rows.append(hs.count_lines(field, args.n, k, args.workers, args.budget))
    else:
        if not args.grid:
            print("error: --grid m<=M,l<=L or --lines required", file=sys.stderr)
            return EXIT_VIOLATION
        m_ = _GRID_RE.match(args.grid.replace(" ", ""))
        if not m_:
            print(f"error: malformed grid {args.grid!r}", file=sys.stderr)
            return EXIT_VIOLATION
        mmax, lmax = int(m_.group(1)), int(m_.group(2))
        cache: dict = {}
        for m in range(1, mmax + 1):
            rows.append(hs.count_S(field, m, None, None, args.workers, args.budget, cache))
            for l in range(0, min(lmax, m // 2) + 1):
                rows.append(hs.count_S(field, m, l, None, args.workers, args.budget, cache))
                for variant in (1, 2, 3):
                    rows.append(hs.count_N(field, variant, m, l, False,
                                           args.workers, args.budget, cache))
                if args.include_t:
                    try:
                        rows.append(hs.count_T(field, m, l, False, None,
                                               args.workers, args.budget, cache))
                        rows.append(hs.count_T(field, m, l, True, None,
                                               args.workers, args.budget, cache))
                    except RegimeError as exc:
                        rejected.append(f"T(m={m}, l={l}): regime rejected ({exc})")
    payload = {
        "reports": [
            {"label": r.label, "q": r.q, "measured": r.measured,
             "formula": r.formula, "matches": r.matches}
            for r in rows
        ],
        "rejected": rejected,
    }
    if args.out:
        serialize.write_json(args.out, payload)
    bad = [r for r in rows if not r.matches]
    for r in rows:
        mark = "ok" if r.matches else "MISMATCH"
        print(f"{mark} {r.label} q={r.q}: measured={r.measured} formula={r.formula}")
    for line in rejected:
        print(line)
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_verify(args) -> int:
    matrix = verify.run_full(args.workers, args.budget, args.quick)
    for check in matrix["checks"]:
        mark = "PASS" if check["passed"] else "FAIL"
        print(f"{mark} {check['name']} ({check['comparisons']} comparisons)")
        for f in check["failures"][:10]:
            print(f"     violated: {f}")
        for s in check["skipped"]:
            print(f"     skipped: {s}")
    out = args.json_out or args.out
    if out:
        serialize.write_json(out, matrix)
    print("all passed" if matrix["all_passed"] else "FAILURES PRESENT")
    return EXIT_OK if matrix["all_passed"] else EXIT_VIOLATION


def cmd_moduli(args) -> int:
    if args.p != 3:
        print("error: characteristic-3 required for curve census", file=sys.stderr)
        return EXIT_VIOLATION
    field = _field(args)
    rep = cz.intrinsic_cardinality(field, args.g, args.workers, args.budget, {})
    payload = {
        "q": rep.q,
        "g": rep.g,
        "values": {str(a): v for a, v in rep.values.items()},
        "comparisons": [c.__dict__ for c in rep.comparisons],
    }
    _write_report(args, payload)
    bad = [c for c in rep.comparisons if not c.equal]
    for a in sorted(rep.values):
        print(f"IC(a={a}) = {rep.values[a]}")
    for c in bad:
        print(f"VIOLATED {c.case}: expected {c.expected}, measured {c.measured}")
    return EXIT_VIOLATION if bad else EXIT_OK


def cmd_nu(args) -> int:
    field = _field(args)
    cache: dict = {}
    comparisons = []
    values = {}
    for j in range(args.jmax + 1):
        vals, comps = cz.heuristic_nu(field, j, args.workers, args.budget, cache)
        values[j] = vals
        comparisons.extend(comps)
    payload = {
        "values": {str(j): {str(a): v for a, v in vs.items()} for j, vs in values.items()},
        "comparisons": [c.__dict__ for c in comparisons],
    }
    _write_report(args, payload)
    bad = [c for c in comparisons if not c.equal]
    for c in comparisons:
        mark = "ok" if c.equal else "MISMATCH"
        print(f"{mark} {c.case}: formula={c.expected} measured={c.measured}")
    return EXIT_VIOLATION if bad else EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "census": cmd_census,
        "heights": cmd_heights,
        "verify": cmd_verify,
        "moduli": cmd_moduli,
        "nu": cmd_nu,
    }
    try:
        return handlers[args.command](args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, RegimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
