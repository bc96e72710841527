"""Command-line surface.

Subcommands: ``indicators`` (per-group table from a corpus CSV),
``correlate`` (tau-b matrix over a columns CSV), ``transform``
(per-article percentiles and deviates), ``synth`` (seeded corpus
generator) and ``report`` (indicator table plus its correlation matrix).

Exit codes: 0 success, 1 usage error, 2 data/validation error. Data goes
to stdout or ``--out``; every diagnostic goes to stderr.

Columns CSVs may carry descending rank columns (1 = top); name them with a
``_rank`` suffix and ``correlate`` negates them on load so their
orientation matches plain value columns.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from importlib import resources

from .corpus import CorpusError, parse_csv, to_csv
from .indicators import indicator_table
from .quantile import ClassScheme, assign_quantiles, default_pr6_scheme, parse_scheme_spec
from .rankstats import NORMAL_APPROXIMATION, PERMUTATION, correlation_matrix
from .render import render_correlation_matrix, render_indicator_table, render_table
from .synth import Lognormal, NegativeBinomial, SynthSpec, generate
from .transform import mccall_z, stratified_mccall_z, stratified_quantiles

__all__ = ["main", "run", "render_table", "table2_columns_text"]

_METHODS = {"normal": NORMAL_APPROXIMATION, "permutation": PERMUTATION}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def table2_columns_text() -> str:
    """The bundled 11-journal fixture (seven comparable published columns)."""
    return (resources.files("citemetrics") / "data" / "table2_columns.csv").read_text()


def _parse_years(text: str) -> frozenset[int]:
    years: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if "-" in part.lstrip("-"):
            lo, hi = part.split("-", 1)
            years.update(range(int(lo), int(hi) + 1))
        else:
            years.add(int(part))
    return frozenset(years)


def _read_corpus(args):
    if args.input == "-":
        return parse_csv(sys.stdin.buffer, args.census_year, args.pub_window)
    with open(args.input, "rb") as handle:
        return parse_csv(handle, args.census_year, args.pub_window)


def _write(args, text: str) -> None:
    if args.out is None or args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _scheme(args) -> ClassScheme:
    if args.scheme is None:
        return default_pr6_scheme()
    return parse_scheme_spec(args.scheme)


def _load_columns(text: str, selected: list[str] | None) -> dict[str, list[float]]:
    """Columns CSV -> label -> numeric column, negating ``_rank`` columns."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise CorpusError("columns file is empty") from None
    rows = [row for row in reader if row]
    for i, row in enumerate(rows, start=2):
        if len(row) != len(header):
            raise CorpusError(f"row:{i}: expected {len(header)} fields, got {len(row)}")

    if selected is not None:
        missing = [name for name in selected if name not in header]
        if missing:
            raise CorpusError(f"unknown column(s): {', '.join(missing)}")
        wanted = selected
    else:
        wanted = header

    columns: dict[str, list[float]] = {}
    for name in wanted:
        idx = header.index(name)
        try:
            values = [float(row[idx]) for row in rows]
        except ValueError:
            if selected is None:
                print(f"skipping non-numeric column {name!r}", file=sys.stderr)
                continue
            raise CorpusError(f"column {name!r} is not numeric") from None
        if name.endswith("_rank"):
            label = name[: -len("_rank")] or name
            if label in columns or label in wanted:
                label = name
            columns[label] = [-v for v in values]
        else:
            columns[name] = values
    if len(columns) < 2:
        raise CorpusError("need at least two numeric columns to correlate")
    return columns


def _cmd_indicators(args) -> int:
    table = indicator_table(_read_corpus(args), _scheme(args))
    _write(args, render_indicator_table(table, args.format))
    return 0


def _cmd_correlate(args) -> int:
    if args.table2:
        text = table2_columns_text()
    elif args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as handle:
            text = handle.read()
    columns = _load_columns(text, args.columns.split(",") if args.columns else None)
    matrix = correlation_matrix(
        columns, threshold=args.threshold, method=_METHODS[args.method],
        seed=args.seed, n_permutations=args.permutations)
    _write(args, render_correlation_matrix(matrix, args.format))
    return 0


def _cmd_transform(args) -> int:
    corpus = _read_corpus(args)
    if not corpus.records:
        raise CorpusError("corpus has no records")
    if args.stratify:
        q_values = stratified_quantiles(corpus)
        z = stratified_mccall_z(corpus)
    else:
        assignment = assign_quantiles(corpus.citations())
        q_values = assignment.q
        z = mccall_z(assignment)

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    value_name = "t" if args.scale == "t" else "z"
    writer.writerow(["article_id", "group", "doc_type", "q", value_name])
    for rec, q, zv in zip(corpus.records, q_values, z.values):
        value = 50.0 + 10.0 * zv if args.scale == "t" else zv
        writer.writerow([rec.article_id, rec.group_key, rec.doc_type,
                         repr(q), repr(value)])
    _write(args, buf.getvalue())
    return 0


def _cmd_synth(args) -> int:
    counts = [int(part) for part in args.articles.split(",")]
    if len(counts) == 1:
        counts = counts * args.groups
    if args.dist == "lognormal":
        distribution = Lognormal(args.mu, args.sigma)
    else:
        distribution = NegativeBinomial(args.r, args.p)
    mix: dict[str, float] = {}
    for part in args.doc_types.split(","):
        name, _, prop = part.partition(":")
        mix[name.strip()] = float(prop)
    outlier = None
    if args.outlier:
        group_text, _, count_text = args.outlier.partition(":")
        outlier = (int(group_text), int(count_text))
    spec = SynthSpec(
        n_groups=args.groups, articles_per_group=tuple(counts),
        distribution=distribution, doc_type_mix=mix, outlier=outlier,
        seed=args.seed, census_year=args.census_year,
        pub_window=tuple(sorted(args.pub_window)))
    _write(args, to_csv(generate(spec)))
    return 0


def _cmd_report(args) -> int:
    corpus = _read_corpus(args)
    table = indicator_table(corpus, _scheme(args))
    order = ("jif", "jif_z", "cjif_z", "pct_i3", "pct_pr6", "n_pub", "n_cit")
    columns = {name: table.column(name) for name in order}
    matrix = correlation_matrix(
        columns, threshold=args.threshold, method=_METHODS[args.method],
        seed=args.seed, n_permutations=args.permutations)
    if args.format == "markdown":
        text = ("## Indicator table\n\n"
                + render_indicator_table(table, "markdown")
                + "\n## Rank correlations (Kendall tau-b)\n\n"
                + render_correlation_matrix(matrix, "markdown"))
    else:
        text = (render_indicator_table(table, "csv") + "\n"
                + render_correlation_matrix(matrix, "csv"))
    _write(args, text)
    return 0


def _add_io_flags(sub, with_format=True):
    sub.add_argument("--out", "-o", default=None,
                     help="output path (default: stdout)")
    if with_format:
        sub.add_argument("--format", choices=["csv", "markdown"], default="csv",
                         help="output format (default: csv)")


def _add_corpus_flags(sub):
    sub.add_argument("--input", "-i", required=True,
                     help="corpus CSV path, or - for stdin")
    sub.add_argument("--census-year", type=int, default=2010,
                     help="year citations were counted in (default: 2010)")
    sub.add_argument("--pub-window", type=_parse_years, default=frozenset({2008, 2009}),
                     help="publication years, e.g. 2008,2009 or 2008-2009")


def _add_stats_flags(sub):
    sub.add_argument("--threshold", type=float, default=0.01,
                     help="significance threshold on p (default: 0.01)")
    sub.add_argument("--method", choices=sorted(_METHODS), default="normal",
                     help="p-value method (default: normal)")
    sub.add_argument("--seed", type=int, default=0,
                     help="seed for the permutation stream")
    sub.add_argument("--permutations", type=int, default=100_000,
                     help="Monte-Carlo permutation count (default: 100000)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="citemetrics",
                     description="Citation-impact indicators and rank statistics")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("indicators", help="per-group indicator table")
    _add_corpus_flags(sub)
    sub.add_argument("--scheme", default=None,
                     help="percentile classes as lower:upper:weight triples")
    _add_io_flags(sub)
    sub.set_defaults(func=_cmd_indicators)

    sub = commands.add_parser("correlate", help="tau-b matrix over a columns CSV")
    sub.add_argument("--input", "-i", default=None,
                     help="columns CSV path, or - for stdin")
    sub.add_argument("--table2", action="store_true",
                     help="use the bundled 11-journal fixture as input")
    sub.add_argument("--columns", default=None,
                     help="comma-separated column names (default: all numeric)")
    _add_stats_flags(sub)
    _add_io_flags(sub)
    sub.set_defaults(func=_cmd_correlate)

    sub = commands.add_parser("transform", help="per-article percentiles and deviates")
    _add_corpus_flags(sub)
    sub.add_argument("--stratify", action="store_true",
                     help="rank within document-type strata")
    sub.add_argument("--scale", choices=["z", "t"], default="z",
                     help="emit z deviates or T = 50 + 10z (default: z)")
    _add_io_flags(sub, with_format=False)
    sub.set_defaults(func=_cmd_transform)

    sub = commands.add_parser("synth", help="generate a synthetic corpus CSV")
    sub.add_argument("--groups", type=int, default=11)
    sub.add_argument("--articles", default="30",
                     help="articles per group: one count or a comma list")
    sub.add_argument("--dist", choices=["lognormal", "negbin"], default="lognormal")
    sub.add_argument("--mu", type=float, default=0.5)
    sub.add_argument("--sigma", type=float, default=1.2)
    sub.add_argument("--r", type=float, default=2.0)
    sub.add_argument("--p", type=float, default=0.3)
    sub.add_argument("--doc-types", default="article:1.0",
                     help="doc-type proportions, e.g. article:0.7,review:0.3")
    sub.add_argument("--outlier", default=None,
                     help="force one citation count as GROUP:COUNT, e.g. 0:270")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--census-year", type=int, default=2010)
    sub.add_argument("--pub-window", type=_parse_years, default=frozenset({2008, 2009}))
    _add_io_flags(sub, with_format=False)
    sub.set_defaults(func=_cmd_synth)

    sub = commands.add_parser("report", help="indicator table plus correlation matrix")
    _add_corpus_flags(sub)
    sub.add_argument("--scheme", default=None,
                     help="percentile classes as lower:upper:weight triples")
    _add_stats_flags(sub)
    _add_io_flags(sub)
    sub.set_defaults(func=_cmd_report)
    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse arguments and execute; returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    if args.command == "correlate":
        if bool(args.table2) == bool(args.input):
            print("usage error: pass exactly one of --input or --table2",
                  file=sys.stderr)
            return 1

    try:
        return args.func(args)
    except (CorpusError, OSError, ValueError) as exc:
        print(str(exc), file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> int:
    return run(argv)
