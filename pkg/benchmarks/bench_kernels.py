#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Two workloads, matching where the engine actually spends time:
  * character table: every character value of a degree from a cold memo
  * oracle: transposition-tuple counting with the transitivity check

Run from the repository root after installing the package:

    python benchmarks/bench_kernels.py
"""

import argparse
import itertools
import time

from hurwitz._kernels import pure
from hurwitz.partitions import enumerate_partitions

try:
    from hurwitz._kernels import _fast
except ImportError:
    _fast = None


def time_character_table(kernel, degree: int) -> float:
    parts = [p.parts for p in enumerate_partitions(degree)]
    kernel.clear_memo()
    started = time.perf_counter()
    for lam, mu in itertools.product(parts, parts):
        kernel.character_value(lam, mu)
    return time.perf_counter() - started


def time_oracle(kernel, degree: int, k: int) -> float:
    started = time.perf_counter()
    kernel.count_transposition_factorizations(degree, (), k, True)
    return time.perf_counter() - started


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--table-degree", type=int, default=14,
                        help="degree for the character-table workload (default 14)")
    parser.add_argument("--oracle-degree", type=int, default=5,
                        help="degree for the tuple-counting workload (default 5)")
    parser.add_argument("--oracle-k", type=int, default=6,
                        help="transposition count for the tuple workload (default 6)")
    parser.add_argument("--repeat", type=int, default=3,
                        help="repetitions, best time reported (default 3)")
    args = parser.parse_args()

    workloads = [
        (
            f"character table d={args.table_degree}",
            lambda kernel: time_character_table(kernel, args.table_degree),
        ),
        (
            f"oracle d={args.oracle_degree} k={args.oracle_k}",
            lambda kernel: time_oracle(kernel, args.oracle_degree, args.oracle_k),
        ),
    ]

    if _fast is None:
        print("compiled kernel not built; timing the pure fallback only")

    print(f"{'workload':<28} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for name, runner in workloads:
        pure_time = min(runner(pure) for _ in range(args.repeat))
        if _fast is not None:
            fast_time = min(runner(_fast) for _ in range(args.repeat))
            print(f"{name:<28} {pure_time:>9.4f}s {fast_time:>9.4f}s {pure_time / fast_time:>8.1f}x")
        else:
            print(f"{name:<28} {pure_time:>9.4f}s {'-':>10} {'-':>9}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
