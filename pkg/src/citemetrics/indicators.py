"""Per-group impact indicators and their rankings.

Covers the citations-per-item ratio (JIF), the mean area-transformed
deviate with and without document-type control (JIF_z, cJIF_z), the sum of
continuous percentile ranks (I3) and the weighted six-class count (PR6),
plus percent shares and competition ranks over all of them. Group keys are
arbitrary labels -- journals, institutes, countries -- the math never
looks inside them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .corpus import Corpus
from .quantile import (
    ClassAssignment,
    ClassScheme,
    QuantileAssignment,
    assign_classes,
    assign_quantiles,
    default_pr6_scheme,
)
from .transform import ZAssignment, mccall_z, stratified_mccall_z

#: Row fields that get a competition-rank column.
RANKED_COLUMNS = ("n_pub", "n_cit", "jif", "jif_z", "cjif_z",
                  "i3", "pct_i3", "pr6", "pct_pr6")


@dataclass(frozen=True, slots=True)
class IndicatorRow:
    """All indicator values for one group, plus its per-column ranks."""

    group: str
    n_pub: int
    n_cit: int
    jif: float
    jif_z: float
    cjif_z: float
    i3: float
    pct_i3: float
    pr6: int
    pct_pr6: float
    ranks: dict[str, int]


@dataclass(frozen=True, slots=True)
class IndicatorTable:
    """Indicator rows ordered by descending JIF (ties keep input order)."""

    rows: tuple[IndicatorRow, ...]

    def groups(self) -> list[str]:
        return [row.group for row in self.rows]

    def row(self, group: str) -> IndicatorRow:
        for row in self.rows:
            if row.group == group:
                return row
        raise ValueError(f"unknown group: {group}")

    def column(self, name: str) -> list[float]:
        """One value column, in row order."""
        return [getattr(row, name) for row in self.rows]

    def columns(self) -> dict[str, list[float]]:
        """All value columns keyed by field name, in row order."""
        return {name: self.column(name) for name in RANKED_COLUMNS}


def _group_positions(corpus: Corpus, group: str) -> list[int]:
    positions = corpus.group_indices().get(group)
    if positions is None:
        raise ValueError(f"unknown group: {group}")
    return positions


def jif(n_cit: int, n_pub: int) -> float:
    """Citations per published item."""
    if n_pub <= 0:
        raise ValueError("jif undefined for zero publications")
    return n_cit / n_pub


def jif_z(corpus: Corpus, z: ZAssignment, group: str) -> float:
    """Mean pooled-reference deviate over the group's articles."""
    if z.stratification != "none":
        raise ValueError("jif_z requires pooled (unstratified) z values")
    if len(z.values) != len(corpus.records):
        raise ValueError("z values do not align with the corpus")
    positions = _group_positions(corpus, group)
    return math.fsum(z.values[i] for i in positions) / len(positions)


def cjif_z(corpus: Corpus, group: str) -> float:
    """Mean deviate with document type controlled by within-stratum ranking."""
    z = stratified_mccall_z(corpus)
    positions = _group_positions(corpus, group)
    return math.fsum(z.values[i] for i in positions) / len(positions)


def i3(assignment: QuantileAssignment, corpus: Corpus, group: str) -> float:
    """Sum of the group's continuous percentile ranks."""
    if assignment.reference_size != len(corpus.records):
        raise ValueError("quantile assignment does not align with the corpus")
    positions = _group_positions(corpus, group)
    return math.fsum(assignment.q[i] for i in positions)


def pr6(classes: ClassAssignment, scheme: ClassScheme, corpus: Corpus,
        group: str) -> int:
    """Weighted count of the group's articles over the percentile classes."""
    if len(classes.indices) != len(corpus.records):
        raise ValueError("class assignment does not align with the corpus")
    weights = scheme.weights()
    positions = _group_positions(corpus, group)
    return sum(weights[classes.indices[i] - 1] for i in positions)


def percent_shares(values: Mapping[str, float]) -> dict[str, float]:
    """Each group's share of the total, in percent."""
    for key, value in values.items():
        if value < 0:
            raise ValueError(f"negative value for {key!r}")
    total = math.fsum(values.values())
    if total <= 0:
        raise ValueError("cannot take percent shares of an all-zero map")
    return {key: value * 100.0 / total for key, value in values.items()}


def rank_column(values: Mapping[str, float], descending: bool = True) -> dict[str, int]:
    """Competition ranks: 1 for the largest value, ties share the smaller rank."""
    if not values:
        raise ValueError("cannot rank an empty map")
    ordered = sorted(values.items(), key=lambda kv: kv[1], reverse=descending)
    ranks: dict[str, int] = {}
    for pos, (key, value) in enumerate(ordered):
        if pos > 0 and value == ordered[pos - 1][1]:
            ranks[key] = ranks[ordered[pos - 1][0]]
        else:
            ranks[key] = pos + 1
    return {key: ranks[key] for key in values}


def indicator_table(corpus: Corpus, scheme: ClassScheme | None = None) -> IndicatorTable:
    """Every indicator and rank column for every group in the corpus.

    Percentiles, classes and deviates are computed once over the pooled
    corpus (and once per document-type stratum) and shared across groups,
    so per-group values are mutually consistent by construction.
    """
    if not corpus.records:
        raise ValueError("corpus has no records")
    if scheme is None:
        scheme = default_pr6_scheme()

    assignment = assign_quantiles(corpus.citations())
    pooled_z = mccall_z(assignment)
    strat_z = stratified_mccall_z(corpus)
    classes = assign_classes(assignment, scheme)
    weights = scheme.weights()

    by_group = corpus.group_indices()
    values: dict[str, dict[str, float]] = {name: {} for name in RANKED_COLUMNS}
    for group, positions in by_group.items():
        n_pub = len(positions)
        n_cit = sum(corpus.records[i].citations for i in positions)
        values["n_pub"][group] = n_pub
        values["n_cit"][group] = n_cit
        values["jif"][group] = n_cit / n_pub
        values["jif_z"][group] = math.fsum(pooled_z.values[i] for i in positions) / n_pub
        values["cjif_z"][group] = math.fsum(strat_z.values[i] for i in positions) / n_pub
        values["i3"][group] = math.fsum(assignment.q[i] for i in positions)
        values["pr6"][group] = sum(weights[classes.indices[i] - 1] for i in positions)

    values["pct_i3"] = percent_shares(values["i3"])
    values["pct_pr6"] = percent_shares(values["pr6"])

    ranks = {name: rank_column(values[name]) for name in RANKED_COLUMNS}

    appearance = {group: i for i, group in enumerate(by_group)}
    order = sorted(by_group, key=lambda g: (-values["jif"][g], appearance[g]))
    rows = tuple(
        IndicatorRow(
            group=group,
            n_pub=int(values["n_pub"][group]),
            n_cit=int(values["n_cit"][group]),
            jif=values["jif"][group],
            jif_z=values["jif_z"][group],
            cjif_z=values["cjif_z"][group],
            i3=values["i3"][group],
            pct_i3=values["pct_i3"][group],
            pr6=int(values["pr6"][group]),
            pct_pr6=values["pct_pr6"][group],
            ranks={name: ranks[name][group] for name in RANKED_COLUMNS},
        )
        for group in order
    )
    return IndicatorTable(rows)
