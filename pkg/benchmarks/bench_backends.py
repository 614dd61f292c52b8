"""Timing comparison of the compiled and interpreted kernel backends.

Runs a fixed workload under the current backend, or re-executes itself
under both backends and prints the side-by-side table:

    python benchmarks/bench_backends.py --backend both
"""

import argparse
import json
import os
import subprocess
import sys
import time


def workload(size: str):
    import cartier3 as c3

    f3 = c3.Field(3, 1)
    f2 = c3.Field(2, 1)
    rows = []

    def timed(label, fn):
        t0 = time.perf_counter()
        fn()
        rows.append((label, time.perf_counter() - t0))

    if size == "small":
        census_g, sweep_q, sweep_m, oracle_d, lines_k = 4, 2, 4, 6, 2
    else:
        census_g, sweep_q, sweep_m, oracle_d, lines_k = 5, 3, 3, 8, 2

    cache = {}
    timed(
        f"census q=3 g<={census_g} both parities",
        lambda: [
            c3.run_census(f3, g, eps, cache=cache)
            for g in range(census_g + 1)
            for eps in (1, 2)
        ],
    )
    sweep_field = c3.Field(sweep_q, 1)
    timed(
        f"triple sweep q={sweep_q} m={sweep_m}",
        lambda: c3.sweep(sweep_field, sweep_m, cache={}),
    )
    from cartier3._kernels import cross_oracle_chunk

    tabs = f3.np_tables()

    def oracle():
        for d in range(1, oracle_d + 1):
            g = (d - 1) // 2
            cross_oracle_chunk(3, d, g, d - 2 * g, *tabs, 0, 3**d)

    timed(f"oracle cross-check q=3 deg<={oracle_d}", oracle)
    timed(
        f"line count q=3 k<={lines_k}",
        lambda: [c3.count_lines(f3, 3, k) for k in range(lines_k + 1)],
    )
    return rows


def run_one(size: str):
    from cartier3 import BACKEND

    t0 = time.perf_counter()
    rows = workload(size)
    total = time.perf_counter() - t0
    return {"backend": BACKEND, "rows": rows, "total": total}


def run_subprocess(backend: str, size: str):
    env = dict(os.environ)
    env["CARTIER3_BACKEND"] = backend
    script = (
        "import json, sys; sys.path.insert(0, sys.argv[1]); "
        "import bench_backends as b; print(json.dumps(b.run_one(sys.argv[2])))"
    )
    here = os.path.dirname(os.path.abspath(__file__))
    out = subprocess.run(
        [sys.executable, "-c", script, here, size],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--backend", choices=("both", "numba", "numpy"), default="both")
    ap.add_argument("--size", choices=("small", "medium"), default="small")
    args = ap.parse_args()

    if args.backend != "both":
        os.environ["CARTIER3_BACKEND"] = args.backend
        res = run_one(args.size)
        print(f"backend: {res['backend']}")
        for label, secs in res["rows"]:
            print(f"  {secs:8.3f}s  {label}")
        print(f"  {res['total']:8.3f}s  total")
        return

    results = {b: run_subprocess(b, args.size) for b in ("numba", "numpy")}
    print(f"{'workload':<40} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for (label, t_nb), (_, t_np) in zip(results["numba"]["rows"], results["numpy"]["rows"]):
        print(f"{label:<40} {t_nb:>9.3f}s {t_np:>9.3f}s {t_np / t_nb:>7.1f}x")
    t_nb, t_np = results["numba"]["total"], results["numpy"]["total"]
    print(f"{'total':<40} {t_nb:>9.3f}s {t_np:>9.3f}s {t_np / t_nb:>7.1f}x")
    print("(numba timings include JIT compilation on a cold cache)")


if __name__ == "__main__":
    main()
