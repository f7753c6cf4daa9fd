"""Compiled vs pure-Python F_p reducer, and top vs bottom starting strategy.

    python3 benchmarks/bench_kernels.py [--quick]

Part 1 feeds the same rows (the middle/lower differential rows of every
subcomplex of one bidegree, in discovery order) to both reducers.
Part 2 times whole partitions under each strategy.
"""

import argparse
import statistics
import time

from supercohom import (
    build_algebra,
    complex_of,
    family_lowest_grade,
    parse_family,
    partition_complex,
    required_grade_max,
)
from supercohom._kernels import compiled_backend, python_backend
from supercohom.bench import run_benchmark
from supercohom.linalg.elimination import to_fp_rows


def collect_rows(alg, k, g, p):
    blocks = []
    for sub in partition_complex(alg, k, g, "top"):
        blocks.append(to_fp_rows(sub.D, p))
        blocks.append(to_fp_rows(sub.D_prime, p))
    return blocks


def time_backend(mod, blocks, p, reps):
    times, ranks = [], None
    for _ in range(reps):
        t0 = time.perf_counter()
        out = []
        for rows in blocks:
            red = mod.ModpReducer(p, last=True)
            for row in rows:
                red.add_row(list(row), list(row.values()))
            out.append(red.rank)
        times.append(time.perf_counter() - t0)
        ranks = out
    return statistics.median(times), ranks


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--reps", type=int, default=5)
    args = ap.parse_args()
    p = 17
    cases = [("SLe2", 5, 0), ("H2", 7, 5)] if args.quick else [("SLe2", 6, 0), ("H2", 7, 7)]

    print("kernel        case          rows   median s  speedup")
    for fam, k, g in cases:
        alg = build_algebra(fam, grade_max=required_grade_max(family_lowest_grade(*parse_family(fam)), k, g))
        blocks = collect_rows(alg, k, g, p)
        nrows = sum(len(b) for b in blocks)
        t_py, r_py = time_backend(python_backend, blocks, p, args.reps)
        print(f"python        {fam} ({k},{g})  {nrows:7d}  {t_py:8.3f}")
        if compiled_backend is None:
            print("cython        (extension not built)")
            continue
        t_cy, r_cy = time_backend(compiled_backend, blocks, p, args.reps)
        assert r_cy == r_py, "backends disagree"
        print(f"cython        {fam} ({k},{g})  {nrows:7d}  {t_cy:8.3f}  {t_py / t_cy:6.1f}x")

    print()
    print("strategy      case          median s  ops        ratio")
    for fam, k, g in cases:
        alg = build_algebra(fam, grade_max=required_grade_max(family_lowest_grade(*parse_family(fam)), k, g))
        complex_of(alg)
        rows = run_benchmark(alg, k, g, ("top", "bottom"), (p,), args.reps)
        t_top = rows[0]["median_time"]
        for r in rows:
            print(f"{r['strategy']:<12}  {fam} ({k},{g})  {r['median_time']:8.3f}  "
                  f"{r['modp_ops']:<9d}  {r['median_time'] / t_top:.2f}")


if __name__ == "__main__":
    main()
