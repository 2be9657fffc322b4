"""Compare the numba and numpy kernel backends on representative workloads.

Usage: python benchmarks/bench_backends.py [--repeat N]

Workloads mirror the hot paths: the exhaustive (16,6,2) candidate sweep, the
quotient tabulation for the largest family member (order 576, k = 276), and
the pairwise-overlap counting behind triple-array verification at u = 12.
"""

from __future__ import annotations

import argparse
import math
import time
from itertools import combinations

import numpy as np

from triarray._backend import numpy_impl
from triarray.family import generate_family_member
from triarray.groups import make_abelian

try:
    from triarray._backend import numba_impl
except ImportError:
    numba_impl = None


def build_workloads():
    g16 = make_abelian([4, 4])
    cands = np.array([(g16.identity,) + c
                      for c in combinations([i for i in range(16) if i != g16.identity], 5)],
                     dtype=np.int64)

    member = generate_family_member(12).diffset
    big = member.group
    members = np.asarray(member.members, dtype=np.int64)

    rng = np.random.default_rng(0)
    occ = (rng.random((276, 575)) < 0.52).astype(np.uint8)
    sym = (rng.random((300, 575)) < 0.52).astype(np.uint8)

    return {
        "search 3003 candidates (v=16)": lambda impl: impl.diffset_batch_mask(
            g16.mul_table, g16.inverse, cands, 2),
        "quotient counts (v=576, k=276)": lambda impl: impl.quotient_counts(
            big.mul_table, big.inverse, members, big.identity),
        "common counts 276x575 @ 300x575": lambda impl: impl.common_counts(occ, sym),
        "convolve dense (v=576)": lambda impl: impl.convolve(
            big.mul_table, np.ones(576, dtype=np.int64), np.ones(576, dtype=np.int64)),
    }


def time_call(fn, repeat: int) -> float:
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    workloads = build_workloads()
    impls = [("numpy", numpy_impl)]
    if numba_impl is not None:
        for work in workloads.values():   # compile outside the timed region
            work(numba_impl)
        impls.append(("numba", numba_impl))
    else:
        print("numba not installed; timing the numpy backend only")

    width = max(len(name) for name in workloads)
    header = f"{'workload':<{width}}" + "".join(f"  {name:>10}" for name, _ in impls)
    print(header)
    print("-" * len(header))
    for name, work in workloads.items():
        times = [time_call(lambda: work(impl), args.repeat) for _, impl in impls]
        row = f"{name:<{width}}" + "".join(f"  {t * 1e3:>8.2f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"  (numpy/numba = {times[0] / times[1]:.1f}x)"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
