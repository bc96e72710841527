"""Continuous percentile ranks and percentile-class assignment.

Percentiles use fractional (mid-rank) counting: an article's rank is the
number of reference items cited strictly less, plus half of its tie group
(itself included). This keeps every percentile inside the open interval
(0, 100) -- so the inverse-normal transform stays finite -- and reduces to
the Hazen plotting position 100*(i - 0.5)/N when all counts are distinct.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True, slots=True)
class QuantileAssignment:
    """Per-article percentile ranks over a reference set of size N."""

    q: tuple[float, ...]
    reference_size: int


@dataclass(frozen=True, slots=True)
class ClassBand:
    """Half-open percentile band [lower, upper) with an integer weight."""

    lower: float
    upper: float
    weight: int
    label: str


@dataclass(frozen=True, slots=True)
class ClassScheme:
    """Ordered percentile bands partitioning [0, 100), weights increasing."""

    bands: tuple[ClassBand, ...]

    def __post_init__(self):
        object.__setattr__(self, "bands", tuple(self.bands))
        if not self.bands:
            raise ValueError("class scheme needs at least one band")
        if self.bands[0].lower != 0.0:
            raise ValueError("first band must start at 0")
        if self.bands[-1].upper != 100.0:
            raise ValueError("last band must end at 100")
        prev = None
        for band in self.bands:
            if not band.lower < band.upper:
                raise ValueError(f"band {band.label!r}: lower must be < upper")
            if prev is not None:
                if band.lower != prev.upper:
                    raise ValueError(
                        f"bands {prev.label!r} and {band.label!r} do not join: "
                        f"{prev.upper} != {band.lower}")
                if band.weight <= prev.weight:
                    raise ValueError("weights must be strictly increasing")
            if not isinstance(band.weight, int) or band.weight < 1:
                raise ValueError(f"band {band.label!r}: weight must be an integer >= 1")
            prev = band

    def __len__(self) -> int:
        return len(self.bands)

    def weights(self) -> tuple[int, ...]:
        return tuple(band.weight for band in self.bands)


@dataclass(frozen=True, slots=True)
class ClassAssignment:
    """Per-article class index, 1 = bottom band."""

    indices: tuple[int, ...]
    n_classes: int


def assign_quantiles(citations: Sequence[int]) -> QuantileAssignment:
    """Mid-rank percentile for each citation count against the whole list.

    q_i = 100 * (L_i + 0.5 * E_i) / N with L_i the number of items cited
    strictly less and E_i the size of item i's tie group.
    """
    n = len(citations)
    if n == 0:
        raise ValueError("cannot assign quantiles over an empty reference set")
    for c in citations:
        if not isinstance(c, int) or c < 0:
            raise ValueError(f"citation counts must be non-negative integers, got {c!r}")

    ordered = sorted(citations)
    q_of: dict[int, float] = {}
    below = 0
    i = 0
    while i < n:
        j = i
        while j < n and ordered[j] == ordered[i]:
            j += 1
        equal = j - i
        q_of[ordered[i]] = 100.0 * (below + 0.5 * equal) / n
        below += equal
        i = j
    return QuantileAssignment(tuple(q_of[c] for c in citations), n)


def default_pr6_scheme() -> ClassScheme:
    """The six-band scheme: bottom-50%, 50-75%, 75-90%, 90-95%, 95-99%, top-1%."""
    return ClassScheme((
        ClassBand(0.0, 50.0, 1, "bottom-50%"),
        ClassBand(50.0, 75.0, 2, "50-75%"),
        ClassBand(75.0, 90.0, 3, "75-90%"),
        ClassBand(90.0, 95.0, 4, "90-95%"),
        ClassBand(95.0, 99.0, 5, "95-99%"),
        ClassBand(99.0, 100.0, 6, "top-1%"),
    ))


def assign_classes(assignment: QuantileAssignment, scheme: ClassScheme) -> ClassAssignment:
    """Band index (1-based) for each percentile; bands are lower-inclusive."""
    lowers = [band.lower for band in scheme.bands]
    indices = tuple(bisect_right(lowers, q) for q in assignment.q)
    return ClassAssignment(indices, len(scheme))


def parse_scheme_spec(text: str) -> ClassScheme:
    """Build a scheme from ``lower:upper:weight`` triples, comma separated.

    Example: ``0:50:1,50:75:2,75:90:3,90:95:4,95:99:5,99:100:6``.
    """
    bands = []
    for part in text.split(","):
        pieces = part.split(":")
        if len(pieces) != 3:
            raise ValueError(f"bad class triple {part!r}, expected lower:upper:weight")
        try:
            lower, upper = float(pieces[0]), float(pieces[1])
            weight = int(pieces[2])
        except ValueError as exc:
            raise ValueError(f"bad class triple {part!r}: {exc}") from exc
        bands.append(ClassBand(lower, upper, weight, f"{pieces[0]}-{pieces[1]}%"))
    return ClassScheme(tuple(bands))
