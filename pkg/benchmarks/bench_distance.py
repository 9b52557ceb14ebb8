#!/usr/bin/env python3
"""Benchmark the exact-distance Gray-code scan: compiled vs pure kernel.

The inner loop of the exact search is one generator XOR, one popcount,
and (on weight improvement) a short span-exclusion reduction per
enumerated combination; this script times the full 2^rank(N)
enumerations for the m=1 instances with both kernel implementations and
reports the speedup.

Usage: python benchmarks/bench_distance.py [--repeat R]
"""

from __future__ import annotations

import argparse
import time

from stabcat.concat import build_code
from stabcat.distance import HAVE_COMPILED, exact_distance


def time_kernel(code, kernel: str, parts: int, repeat: int):
    best = None
    report = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        report = exact_distance(code, parts=parts, kernel=kernel)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, report


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions, best-of (default 3)")
    args = parser.parse_args()

    kernels = ["pure"] + (["compiled"] if HAVE_COMPILED else [])
    if not HAVE_COMPILED:
        print("note: compiled kernel unavailable; timing pure only")

    rows = []
    for m, big_k, parts in ((1, 1, 1), (1, 1, 8), (1, 0, 1), (1, 0, 8)):
        code = build_code(m, big_k)
        label = f"m={m} K={big_k} rank(N)={code.rank_n} parts={parts}"
        times = {}
        result = None
        for kernel in kernels:
            dt, report = time_kernel(code, kernel, parts, args.repeat)
            times[kernel] = dt
            if result is None:
                result = (report.d, report.witness.packed())
            elif result != (report.d, report.witness.packed()):
                raise AssertionError(f"kernel disagreement on {label}")
        rows.append((label, result[0], times))

    print(f"{'instance':<38} {'d':>3} {'pure':>10} {'compiled':>10} "
          f"{'speedup':>8}")
    for label, d, times in rows:
        pure = times.get("pure")
        comp = times.get("compiled")
        if comp is not None:
            print(f"{label:<38} {d:>3} {pure:>9.3f}s {comp:>9.3f}s "
                  f"{pure / comp:>7.1f}x")
        else:
            print(f"{label:<38} {d:>3} {pure:>9.3f}s {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
