"""Table rendering: display-precision markdown and machine-precision CSV.

Markdown mirrors the published layouts -- indicator rows carry bracketed
ranks ("0.68 [1]"), correlation entries below the significance threshold
get a trailing dagger. CSV keeps full float precision (shortest
round-trip repr) and no decoration, so rendered numbers re-parse exactly.
"""

from __future__ import annotations

import csv
import io
from decimal import ROUND_HALF_UP, Decimal

from .indicators import RANKED_COLUMNS, IndicatorTable
from .rankstats import CorrelationMatrix

SIGNIFICANCE_MARK = "⁺"  # superscript plus, as used in the source tables


def fmt2(value: float) -> str:
    """Two decimals, ties away from zero (display precision)."""
    return str(Decimal(repr(float(value))).quantize(
        Decimal("0.01"), rounding=ROUND_HALF_UP))


def _markdown_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(cell)) for w, cell in zip(widths, row)]
    lines = [
        "| " + " | ".join(h.ljust(w) for h, w in zip(header, widths)) + " |",
        "|-" + "-|-".join("-" * w for w in widths) + "-|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(c.ljust(w) for c, w in zip(row, widths)) + " |")
    return "\n".join(lines) + "\n"


def render_indicator_table(table: IndicatorTable, fmt: str = "csv") -> str:
    if not table.rows:
        raise ValueError("cannot render an empty table")
    if fmt == "markdown":
        header = ["group", "n_pub", "n_cit", "jif",
                  "jif_z", "cjif_z", "pct_i3", "pct_pr6"]
        rows = []
        for row in table.rows:
            rows.append([
                row.group, str(row.n_pub), str(row.n_cit), fmt2(row.jif),
                f"{fmt2(row.jif_z)} [{row.ranks['jif_z']}]",
                f"{fmt2(row.cjif_z)} [{row.ranks['cjif_z']}]",
                f"{fmt2(row.pct_i3)} [{row.ranks['pct_i3']}]",
                f"{fmt2(row.pct_pr6)} [{row.ranks['pct_pr6']}]",
            ])
        return _markdown_table(header, rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["group", "n_pub", "n_cit", "jif", "jif_z", "cjif_z",
                         "i3", "pct_i3", "pr6", "pct_pr6"]
                        + [f"rank_{name}" for name in RANKED_COLUMNS])
        for row in table.rows:
            writer.writerow([row.group, row.n_pub, row.n_cit, repr(row.jif),
                             repr(row.jif_z), repr(row.cjif_z), repr(row.i3),
                             repr(row.pct_i3), row.pr6, repr(row.pct_pr6)]
                            + [row.ranks[name] for name in RANKED_COLUMNS])
        return buf.getvalue()
    raise ValueError(f"unknown format: {fmt!r}")


def render_correlation_matrix(matrix: CorrelationMatrix, fmt: str = "csv") -> str:
    if fmt == "markdown":
        labels = matrix.labels
        header = [""] + list(labels[:-1])
        rows = []
        for i in range(1, len(labels)):
            cells = [labels[i]]
            for j in range(len(labels) - 1):
                if j < i:
                    result = matrix.entries[(labels[i], labels[j])]
                    mark = f" {SIGNIFICANCE_MARK}" if matrix.is_significant(result) else ""
                    cells.append(fmt2(result.tau) + mark)
                else:
                    cells.append("")
            rows.append(cells)
        text = _markdown_table(header, rows)
        return text + f"\n{SIGNIFICANCE_MARK} p < {matrix.threshold:g}\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["var_a", "var_b", "tau", "p_value", "significant",
                         "n", "concordant", "discordant", "ties_a", "ties_b",
                         "method"])
        for row_label, col_label, result in matrix.pairs():
            writer.writerow([
                row_label, col_label, repr(result.tau), repr(result.p_value),
                int(matrix.is_significant(result)), result.n,
                result.concordant, result.discordant,
                result.ties_x, result.ties_y, result.method,
            ])
        return buf.getvalue()
    raise ValueError(f"unknown format: {fmt!r}")


def render_table(table: IndicatorTable | CorrelationMatrix, fmt: str = "csv") -> str:
    """Render either table kind in the requested format."""
    if isinstance(table, IndicatorTable):
        return render_indicator_table(table, fmt)
    if isinstance(table, CorrelationMatrix):
        return render_correlation_matrix(table, fmt)
    raise TypeError(f"cannot render {type(table).__name__}")
