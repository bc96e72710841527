"""Article-level citation records: data model, CSV ingestion, validation.

The corpus is the percentile reference set for everything downstream, so
ingestion is strict: every malformed row is reported (not just the first),
and a corpus object that exists is by construction internally consistent.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import IO, Iterable

CSV_HEADER = ("article_id", "group", "pub_year", "doc_type", "citations")


class CorpusError(ValueError):
    """Invalid corpus data or metadata."""


@dataclass(frozen=True, slots=True)
class RowProblem:
    """One diagnostic tied to a CSV record (header is row 1)."""

    row: int
    column: str
    message: str

    def __str__(self) -> str:
        return f"row:{self.row} col:{self.column}: {self.message}"


class CorpusValidationError(CorpusError):
    """One or more rows failed validation; carries every diagnostic."""

    def __init__(self, problems: Iterable[RowProblem]):
        self.problems = tuple(problems)
        super().__init__("\n".join(str(p) for p in self.problems))


@dataclass(frozen=True, slots=True)
class ArticleRecord:
    """One published item and its census-year citation count."""

    article_id: str
    group_key: str
    pub_year: int
    doc_type: str
    citations: int


@dataclass(frozen=True)
class Corpus:
    """Validated, immutable set of records plus census metadata.

    Records keep their input order; that order anchors every downstream
    per-article sequence (quantiles, z-values, class labels).
    """

    records: tuple[ArticleRecord, ...]
    census_year: int
    pub_window: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "records", tuple(self.records))
        object.__setattr__(self, "pub_window", frozenset(self.pub_window))
        if not self.pub_window:
            raise CorpusError("publication window must contain at least one year")
        seen: set[str] = set()
        for rec in self.records:
            if not rec.article_id:
                raise CorpusError("article_id must be non-empty")
            if rec.article_id in seen:
                raise CorpusError(f"duplicate article_id: {rec.article_id!r}")
            seen.add(rec.article_id)
            if not rec.group_key:
                raise CorpusError(f"{rec.article_id}: group_key must be non-empty")
            if not rec.doc_type:
                raise CorpusError(f"{rec.article_id}: doc_type must be non-empty")
            if rec.citations < 0:
                raise CorpusError(f"{rec.article_id}: citations must be >= 0")
            if rec.pub_year not in self.pub_window:
                raise CorpusError(
                    f"{rec.article_id}: pub_year {rec.pub_year} outside window "
                    f"{sorted(self.pub_window)}"
                )

    def __len__(self) -> int:
        return len(self.records)

    def citations(self) -> list[int]:
        """Citation counts in record order."""
        return [rec.citations for rec in self.records]

    def group_indices(self) -> dict[str, list[int]]:
        """Record positions per group, groups in first-appearance order."""
        out: dict[str, list[int]] = {}
        for i, rec in enumerate(self.records):
            out.setdefault(rec.group_key, []).append(i)
        return out


def _parse_int(text: str) -> int:
    value = int(text.strip())
    return value


def parse_csv(source: IO, census_year: int, pub_window: Iterable[int]) -> Corpus:
    """Read and validate the corpus CSV.

    The header must be exactly ``article_id,group,pub_year,doc_type,citations``.
    Rows are numbered with the header as row 1. All row-level problems are
    collected and raised together as a :class:`CorpusValidationError`;
    rows whose pub_year falls outside ``pub_window`` are rejected the same
    way, one diagnostic per offending row.
    """
    window = frozenset(pub_window)
    if not window:
        raise CorpusError("publication window must contain at least one year")

    data = source.read()
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CorpusValidationError(
                [RowProblem(0, "encoding", f"input is not UTF-8: {exc}")]
            ) from exc

    reader = csv.reader(io.StringIO(data))
    try:
        header = next(reader)
    except StopIteration:
        raise CorpusValidationError(
            [RowProblem(1, "header", "empty input, expected header "
                        + ",".join(CSV_HEADER))]
        ) from None
    if tuple(header) != CSV_HEADER:
        raise CorpusValidationError(
            [RowProblem(1, "header",
                        f"expected {','.join(CSV_HEADER)!r}, got {','.join(header)!r}")]
        )

    problems: list[RowProblem] = []
    records: list[ArticleRecord] = []
    seen_ids: set[str] = set()
    for row_no, fields in enumerate(reader, start=2):
        if not fields:
            continue  # blank line
        if len(fields) != len(CSV_HEADER):
            problems.append(RowProblem(
                row_no, "record",
                f"expected {len(CSV_HEADER)} fields, got {len(fields)}"))
            continue
        article_id, group_key, year_text, doc_type, cit_text = fields

        ok = True
        if not article_id:
            problems.append(RowProblem(row_no, "article_id", "must be non-empty"))
            ok = False
        elif article_id in seen_ids:
            problems.append(RowProblem(
                row_no, "article_id", f"duplicate article_id {article_id!r}"))
            ok = False
        if not group_key:
            problems.append(RowProblem(row_no, "group", "must be non-empty"))
            ok = False
        if not doc_type:
            problems.append(RowProblem(row_no, "doc_type", "must be non-empty"))
            ok = False

        pub_year = None
        try:
            pub_year = _parse_int(year_text)
        except ValueError:
            problems.append(RowProblem(
                row_no, "pub_year", f"not an integer: {year_text!r}"))
            ok = False
        if pub_year is not None and pub_year not in window:
            problems.append(RowProblem(
                row_no, "pub_year",
                f"year {pub_year} outside publication window {sorted(window)}"))
            ok = False

        citations = None
        try:
            citations = _parse_int(cit_text)
        except ValueError:
            problems.append(RowProblem(
                row_no, "citations", f"not an integer: {cit_text!r}"))
            ok = False
        if citations is not None and citations < 0:
            problems.append(RowProblem(
                row_no, "citations", f"must be >= 0, got {citations}"))
            ok = False

        if ok:
            seen_ids.add(article_id)
            records.append(ArticleRecord(
                article_id, group_key, pub_year, doc_type, citations))

    if problems:
        raise CorpusValidationError(problems)
    return Corpus(tuple(records), census_year, window)


def to_csv(corpus: Corpus) -> str:
    """Serialize back to the ingestion schema (round-trips through parse_csv)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in corpus.records:
        writer.writerow([rec.article_id, rec.group_key, rec.pub_year,
                         rec.doc_type, rec.citations])
    return buf.getvalue()


def group_sizes(corpus: Corpus) -> dict[str, tuple[int, int]]:
    """Per-group (publication count, citation sum), first-appearance order."""
    out: dict[str, tuple[int, int]] = {}
    for rec in corpus.records:
        n_pub, n_cit = out.get(rec.group_key, (0, 0))
        out[rec.group_key] = (n_pub + 1, n_cit + rec.citations)
    return out
