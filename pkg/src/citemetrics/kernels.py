"""Hot-loop kernels with a compiled fast path and a pure-Python fallback.

Two operations dominate runtime: exact pair counting behind Kendall's
tau-b, and the Monte-Carlo permutation null for its p-value (10^5 shuffles
per test). Both are provided here twice:

* ``pair_counts_py`` / ``perm_exceed_count_py`` -- pure Python. Pair
  counting uses the merge-sort formulation (O(n log n)); the permutation
  loop is a straight translation of the compiled one.
* ``citemetrics._ckernels`` -- Cython translation of the same contracts,
  built at install time when a compiler is present.

The module-level ``pair_counts`` and ``perm_exceed_count`` dispatch to the
compiled backend when it imported cleanly, unless ``CITEMETRICS_PURE`` is
set in the environment. Both backends return identical integers for
identical inputs: counts are exact, and the permutation stream is the
shared SplitMix64 generator from ``randstream``. ``tests/test_kernels.py``
holds the cross-backend equivalence checks; ``benchmarks/bench_kernels.py``
compares their speed.
"""

from __future__ import annotations

import os
from array import array
from typing import Sequence

from .randstream import next_u64

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKEND = "pure"
if _ckernels is not None and not os.environ.get("CITEMETRICS_PURE"):
    BACKEND = "compiled"

# The compiled pair counter is a quadratic scan; the pure path is
# O(n log n). Measured crossover sits near n = 700-1300, so large inputs
# stay on the merge-sort path even when the extension is available.
PAIR_COUNT_CUTOFF = 512


def _count_inversions(seq: list[float]) -> int:
    """Pairs i < j with seq[i] > seq[j], counted by merge sort."""
    n = len(seq)
    buf = seq[:]

    def rec(lo: int, hi: int) -> int:
        if hi - lo <= 1:
            return 0
        mid = (lo + hi) // 2
        inv = rec(lo, mid) + rec(mid, hi)
        i, j, k = lo, mid, lo
        while i < mid and j < hi:
            if seq[i] <= seq[j]:
                buf[k] = seq[i]
                i += 1
            else:
                buf[k] = seq[j]
                j += 1
                inv += mid - i
            k += 1
        while i < mid:
            buf[k] = seq[i]
            i += 1
            k += 1
        while j < hi:
            buf[k] = seq[j]
            j += 1
            k += 1
        seq[lo:hi] = buf[lo:hi]
        return inv

    return rec(0, n)


def _tie_pairs(sorted_vals: Sequence[float]) -> int:
    """Sum of t*(t-1)/2 over runs of equal values (input already sorted)."""
    total = 0
    run = 1
    for i in range(1, len(sorted_vals)):
        if sorted_vals[i] == sorted_vals[i - 1]:
            run += 1
        else:
            total += run * (run - 1) // 2
            run = 1
    return total + run * (run - 1) // 2


def pair_counts_py(x: Sequence[float], y: Sequence[float]) -> tuple[int, int, int, int, int]:
    """Exact (concordant, discordant, ties_x, ties_y, ties_xy) pair counts.

    Merge-sort formulation: sort by (x, y), count x-tie and joint-tie runs,
    then the number of strict y-inversions equals the discordant count
    (equal-x blocks are y-sorted, so they contribute no inversions).
    """
    n = len(x)
    order = sorted(range(n), key=lambda k: (x[k], y[k]))
    xs = [x[k] for k in order]
    ys = [y[k] for k in order]

    ties_x = ties_xy = 0
    run = joint = 1
    for i in range(1, n):
        if xs[i] == xs[i - 1]:
            run += 1
            if ys[i] == ys[i - 1]:
                joint += 1
            else:
                ties_xy += joint * (joint - 1) // 2
                joint = 1
        else:
            ties_x += run * (run - 1) // 2
            ties_xy += joint * (joint - 1) // 2
            run = joint = 1
    ties_x += run * (run - 1) // 2
    ties_xy += joint * (joint - 1) // 2

    discordant = _count_inversions(ys[:])
    ties_y = _tie_pairs(sorted(ys))

    total = n * (n - 1) // 2
    concordant = total - ties_x - ties_y + ties_xy - discordant
    return concordant, discordant, ties_x, ties_y, ties_xy


def perm_exceed_count_py(
    x: Sequence[float],
    y: Sequence[float],
    n_perms: int,
    seed: int,
    s_threshold: int,
) -> int:
    """Count shuffles of y whose pair-sign statistic S has |S| >= s_threshold.

    S = sum over pairs of sign(dx) * sign(dy), i.e. concordant minus
    discordant. Shuffles are Fisher-Yates draws from the SplitMix64 stream;
    the work array carries over between iterations (re-shuffling a shuffled
    array with fresh draws is still a uniform permutation).
    """
    n = len(x)
    work = [float(v) for v in y]
    xs = [float(v) for v in x]
    state = seed & 0xFFFFFFFFFFFFFFFF
    hits = 0
    for _ in range(n_perms):
        for i in range(n - 1, 0, -1):
            state, z = next_u64(state)
            j = z % (i + 1)
            work[i], work[j] = work[j], work[i]
        s = 0
        for i in range(n - 1):
            xi = xs[i]
            wi = work[i]
            for j in range(i + 1, n):
                dx = (xi > xs[j]) - (xi < xs[j])
                dy = (wi > work[j]) - (wi < work[j])
                s += dx * dy
        if abs(s) >= s_threshold:
            hits += 1
    return hits


def pair_counts(x: Sequence[float], y: Sequence[float]) -> tuple[int, int, int, int, int]:
    """Backend-dispatching pair counter; see ``pair_counts_py``."""
    if BACKEND == "compiled" and len(x) <= PAIR_COUNT_CUTOFF:
        return _ckernels.pair_counts(array("d", x), array("d", y))
    return pair_counts_py(x, y)


def perm_exceed_count(
    x: Sequence[float],
    y: Sequence[float],
    n_perms: int,
    seed: int,
    s_threshold: int,
) -> int:
    """Backend-dispatching permutation counter; see ``perm_exceed_count_py``."""
    if BACKEND == "compiled":
        return _ckernels.perm_exceed_count(
            array("d", x), array("d", y), n_perms, seed, s_threshold
        )
    return perm_exceed_count_py(x, y, n_perms, seed, s_threshold)
