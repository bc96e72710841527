"""Tie-corrected Kendall rank correlation with significance tests.

tau-b = (C - D) / sqrt((T - ties_x)(T - ties_y)) with T = n(n-1)/2, which
collapses to plain tau when neither column has ties. The statistic depends
on ranks only, so callers may pass raw indicator values or precomputed
ranks interchangeably -- as long as both columns run in the same direction
(a rank column where 1 means "largest" must be negated first).
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from . import kernels

NORMAL_APPROXIMATION = "normal-approximation"
PERMUTATION = "permutation"

DEFAULT_PERMUTATIONS = 100_000


@dataclass(frozen=True, slots=True)
class TauResult:
    """One tau-b statistic with its exact pair counts and a two-sided p."""

    tau: float
    n: int
    concordant: int
    discordant: int
    ties_x: int
    ties_y: int
    ties_xy: int
    p_value: float
    method: str
    xs: tuple[float, ...]
    ys: tuple[float, ...]

    @property
    def s(self) -> int:
        """The pair-sign statistic C - D."""
        return self.concordant - self.discordant


def _normal_p(s: int, n: int) -> float:
    """Two-sided normal-approximation p for the pair-sign statistic.

    z = 3 (C - D) / sqrt(n (n - 1) (2n + 5) / 2); erfc(|z| / sqrt(2))
    equals 2 (1 - Phi(|z|)).
    """
    z = 3.0 * s / math.sqrt(n * (n - 1) * (2 * n + 5) / 2.0)
    return math.erfc(abs(z) / math.sqrt(2.0))


def kendall_tau_b(x: Sequence[float], y: Sequence[float]) -> TauResult:
    """tau-b between two equal-length columns, with exact pair counts.

    The default p-value is the normal approximation; use
    :func:`tau_p_value` for the permutation alternative.
    """
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    n = len(x)
    if n < 2:
        raise ValueError("need at least two observations")
    xs = tuple(float(v) for v in x)
    ys = tuple(float(v) for v in y)

    con, dis, ties_x, ties_y, ties_xy = kernels.pair_counts(xs, ys)
    total = n * (n - 1) // 2
    denom_sq = (total - ties_x) * (total - ties_y)
    if denom_sq == 0:
        raise ValueError("tau-b undefined: one of the columns is constant")
    tau = (con - dis) / math.sqrt(denom_sq)
    return TauResult(
        tau=tau, n=n, concordant=con, discordant=dis,
        ties_x=ties_x, ties_y=ties_y, ties_xy=ties_xy,
        p_value=_normal_p(con - dis, n), method=NORMAL_APPROXIMATION,
        xs=xs, ys=ys,
    )


def tau_p_value(
    result: TauResult,
    method: str = NORMAL_APPROXIMATION,
    seed: int = 0,
    n_permutations: int = DEFAULT_PERMUTATIONS,
) -> float:
    """Two-sided p for an existing tau result.

    Permutation mode shuffles y with the seeded stream and reports the
    fraction of shuffles with |tau| at least the observed value. Because
    shuffling leaves each column's tie structure (hence the denominator)
    unchanged, |tau| >= |tau_obs| is the exact integer comparison
    |S| >= |S_obs|.
    """
    if method == NORMAL_APPROXIMATION:
        return _normal_p(result.s, result.n)
    if method == PERMUTATION:
        hits = kernels.perm_exceed_count(
            result.xs, result.ys, n_permutations, seed, abs(result.s))
        return hits / n_permutations
    raise ValueError(f"unknown p-value method: {method!r}")


@dataclass(frozen=True, slots=True)
class CorrelationMatrix:
    """Lower-triangular tau-b entries over a set of labelled columns."""

    labels: tuple[str, ...]
    entries: dict[tuple[str, str], TauResult]
    threshold: float

    def get(self, a: str, b: str) -> TauResult:
        """Entry for an unordered label pair."""
        if (a, b) in self.entries:
            return self.entries[(a, b)]
        if (b, a) in self.entries:
            return self.entries[(b, a)]
        raise ValueError(f"no entry for pair ({a!r}, {b!r})")

    def pairs(self) -> list[tuple[str, str, TauResult]]:
        """Entries in row-major lower-triangle order."""
        out = []
        for i in range(1, len(self.labels)):
            for j in range(i):
                row, col = self.labels[i], self.labels[j]
                out.append((row, col, self.entries[(row, col)]))
        return out

    def is_significant(self, result: TauResult) -> bool:
        return result.p_value < self.threshold


def correlation_matrix(
    columns: Mapping[str, Sequence[float]],
    threshold: float = 0.01,
    method: str = NORMAL_APPROXIMATION,
    seed: int = 0,
    n_permutations: int = DEFAULT_PERMUTATIONS,
) -> CorrelationMatrix:
    """Pairwise tau-b over every column pair, flagged at the threshold.

    In permutation mode each entry gets its own deterministic stream seed,
    so results do not depend on evaluation order.
    """
    labels = tuple(columns)
    if len(labels) < 2:
        raise ValueError("need at least two columns to correlate")
    length = len(columns[labels[0]])
    for label in labels:
        if len(columns[label]) != length:
            raise ValueError(
                f"column {label!r} has length {len(columns[label])}, "
                f"expected {length}")

    entries: dict[tuple[str, str], TauResult] = {}
    ordinal = 0
    for i in range(1, len(labels)):
        for j in range(i):
            row, col = labels[i], labels[j]
            result = kendall_tau_b(columns[row], columns[col])
            if method == PERMUTATION:
                p = tau_p_value(result, PERMUTATION,
                                seed=seed + 1_000_003 * ordinal,
                                n_permutations=n_permutations)
                result = dataclasses.replace(result, p_value=p, method=PERMUTATION)
            elif method != NORMAL_APPROXIMATION:
                raise ValueError(f"unknown p-value method: {method!r}")
            entries[(row, col)] = result
            ordinal += 1
    return CorrelationMatrix(labels, entries, threshold)
