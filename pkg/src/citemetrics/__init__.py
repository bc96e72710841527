"""Citation-impact indicators over article-level citation records.

Computes per-group impact measures -- citations per item (JIF), mean
area-transformed deviates with and without document-type control (JIF_z,
cJIF_z), the sum of continuous percentile ranks (I3) and the six-class
percentile indicator (PR6) -- and compares their rankings with
tie-corrected Kendall correlation and significance tests.
"""

from .corpus import (
    ArticleRecord,
    Corpus,
    CorpusError,
    CorpusValidationError,
    group_sizes,
    parse_csv,
    to_csv,
)
from .indicators import (
    IndicatorRow,
    IndicatorTable,
    cjif_z,
    i3,
    indicator_table,
    jif,
    jif_z,
    percent_shares,
    pr6,
    rank_column,
)
from .quantile import (
    ClassAssignment,
    ClassBand,
    ClassScheme,
    QuantileAssignment,
    assign_classes,
    assign_quantiles,
    default_pr6_scheme,
    parse_scheme_spec,
)
from .rankstats import (
    CorrelationMatrix,
    TauResult,
    correlation_matrix,
    kendall_tau_b,
    tau_p_value,
)
from .render import render_table
from .synth import Lognormal, NegativeBinomial, SynthSpec, generate
from .transform import (
    ZAssignment,
    inv_norm_cdf,
    mccall_z,
    norm_cdf,
    stratified_mccall_z,
    stratified_quantiles,
    t_scores,
)

__version__ = "0.1.0"

__all__ = [
    "ArticleRecord", "Corpus", "CorpusError", "CorpusValidationError",
    "group_sizes", "parse_csv", "to_csv",
    "QuantileAssignment", "ClassBand", "ClassScheme", "ClassAssignment",
    "assign_quantiles", "assign_classes", "default_pr6_scheme", "parse_scheme_spec",
    "ZAssignment", "inv_norm_cdf", "norm_cdf", "mccall_z",
    "stratified_mccall_z", "stratified_quantiles", "t_scores",
    "IndicatorRow", "IndicatorTable", "indicator_table",
    "jif", "jif_z", "cjif_z", "i3", "pr6", "percent_shares", "rank_column",
    "TauResult", "CorrelationMatrix", "kendall_tau_b", "tau_p_value",
    "correlation_matrix",
    "SynthSpec", "Lognormal", "NegativeBinomial", "generate",
    "render_table",
    "__version__",
]
