#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback.

Run from the repository root after building the extension in place:

    python setup.py build_ext --inplace
    python benchmarks/bench_kernels.py
"""

import random
import time
from array import array

from citemetrics import kernels


def best_of(fn, repeats=5):
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def bench_pair_counts():
    rng = random.Random(1)
    print("pair_counts (concordant/discordant/ties over all pairs)")
    print(f"{'n':>8} {'pure':>12} {'compiled':>12} {'speedup':>9}")
    for n in (100, 1000, 5000):
        x = [float(rng.randint(0, n // 3)) for _ in range(n)]
        y = [float(rng.randint(0, n // 3)) for _ in range(n)]
        t_pure = best_of(lambda: kernels.pair_counts_py(x, y))
        if kernels._ckernels is None:
            print(f"{n:>8} {t_pure * 1e3:>10.2f}ms {'n/a':>12}")
            continue
        ax, ay = array("d", x), array("d", y)
        t_fast = best_of(lambda: kernels._ckernels.pair_counts(ax, ay))
        assert kernels._ckernels.pair_counts(ax, ay) == kernels.pair_counts_py(x, y)
        print(f"{n:>8} {t_pure * 1e3:>10.2f}ms {t_fast * 1e3:>10.2f}ms "
              f"{t_pure / t_fast:>8.1f}x")


def bench_permutations():
    x = [float(v) for v in range(1, 12)]
    y = [2.0, 1.0, 7.0, 3.0, 6.0, 4.0, 8.0, 10.0, 9.0, 5.0, 11.0]
    print()
    print("perm_exceed_count (permutation null for the tau p-value, n=11)")
    print(f"{'perms':>8} {'pure':>12} {'compiled':>12} {'speedup':>9}")
    for n_perms in (10_000, 100_000):
        t_pure = best_of(
            lambda: kernels.perm_exceed_count_py(x, y, n_perms, 7, 31), repeats=3)
        if kernels._ckernels is None:
            print(f"{n_perms:>8} {t_pure * 1e3:>10.1f}ms {'n/a':>12}")
            continue
        ax, ay = array("d", x), array("d", y)
        t_fast = best_of(
            lambda: kernels._ckernels.perm_exceed_count(ax, ay, n_perms, 7, 31),
            repeats=3)
        assert (kernels._ckernels.perm_exceed_count(ax, ay, n_perms, 7, 31)
                == kernels.perm_exceed_count_py(x, y, n_perms, 7, 31))
        print(f"{n_perms:>8} {t_pure * 1e3:>10.1f}ms {t_fast * 1e3:>10.1f}ms "
              f"{t_pure / t_fast:>8.1f}x")


if __name__ == "__main__":
    print(f"active backend: {kernels.BACKEND}")
    print(f"pair-count dispatch cutoff: n <= {kernels.PAIR_COUNT_CUTOFF} "
          "goes compiled, larger inputs use the O(n log n) pure path")
    if kernels._ckernels is None:
        print("compiled kernels unavailable; timing pure Python only")
    print()
    bench_pair_counts()
    bench_permutations()
