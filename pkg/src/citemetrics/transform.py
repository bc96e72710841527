"""Area transformation: percentile ranks through the inverse normal CDF.

The quantile function is Wichura's PPND16 rational approximation
(algorithm AS 241), good to about one unit in the last place of a double
across the full open unit interval; the acceptance suite checks it against
an independent bisection inversion at 1e-8. No numeric library is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .corpus import Corpus
from .quantile import QuantileAssignment, assign_quantiles

# AS 241 PPND16 coefficient sets (central region, near tail, far tail).
_A = (3.3871328727963666080e0, 1.3314166789178437745e2,
      1.9715909503065514427e3, 1.3731693765509461125e4,
      4.5921953931549871457e4, 6.7265770927008700853e4,
      3.3430575583588128105e4, 2.5090809287301226727e3)
_B = (1.0, 4.2313330701600911252e1, 6.8718700749205790830e2,
      5.3941960214247511077e3, 2.1213794301586595867e4,
      3.9307895800092710610e4, 2.8729085735721942674e4,
      5.2264952788528545610e3)
_C = (1.42343711074968357734e0, 4.63033784615654529590e0,
      5.76949722146069140550e0, 3.64784832476320460504e0,
      1.27045825245236838258e0, 2.41780725177450611770e-1,
      2.27238449892691845833e-2, 7.74545014278341407640e-4)
_D = (1.0, 2.05319162663775882187e0, 1.67638483018380384940e0,
      6.89767334985100004550e-1, 1.48103976427480074590e-1,
      1.51986665636164571966e-2, 5.47593808499534494600e-4,
      1.05075007164441684324e-9)
_E = (6.65790464350110377720e0, 5.46378491116411436990e0,
      1.78482653991729133580e0, 2.96560571828504891230e-1,
      2.65321895265761230930e-2, 1.24266094738807843860e-3,
      2.71155556874348757815e-5, 2.01033439929228813265e-7)
_F = (1.0, 5.99832206555887937690e-1, 1.36929880922735805310e-1,
      1.48753612908506148525e-2, 7.86869131145613259100e-4,
      1.84631831751005468180e-5, 1.42151175831644588870e-7,
      2.04426310338993978564e-15)


def _poly(coeffs, r):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * r + c
    return acc


def inv_norm_cdf(p: float) -> float:
    """x with Phi(x) = p for the standard normal, p strictly inside (0, 1)."""
    if not 0.0 < p < 1.0:
        raise ValueError(f"probability must lie strictly between 0 and 1, got {p!r}")
    q = p - 0.5
    if abs(q) <= 0.425:
        r = 0.180625 - q * q
        return q * _poly(_A, r) / _poly(_B, r)
    r = p if q < 0.0 else 1.0 - p
    r = math.sqrt(-math.log(r))
    if r <= 5.0:
        r -= 1.6
        x = _poly(_C, r) / _poly(_D, r)
    else:
        r -= 5.0
        x = _poly(_E, r) / _poly(_F, r)
    return -x if q < 0.0 else x


def norm_cdf(x: float) -> float:
    """Standard normal CDF via the complementary error function."""
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


@dataclass(frozen=True, slots=True)
class ZAssignment:
    """Per-article standard-normal deviates, in corpus record order.

    ``stratification`` records whether percentiles were taken over the
    pooled reference set ("none") or within document types ("by-doc-type").
    """

    values: tuple[float, ...]
    stratification: str


def mccall_z(assignment: QuantileAssignment) -> ZAssignment:
    """z_i = inverse normal CDF of q_i / 100, over the pooled reference set."""
    return ZAssignment(
        tuple(inv_norm_cdf(q / 100.0) for q in assignment.q), "none")


def stratified_quantiles(corpus: Corpus) -> tuple[float, ...]:
    """Percentile rank of each article within its document-type stratum.

    Returned in corpus record order; a stratum of size one yields q = 50.
    """
    strata: dict[str, list[int]] = {}
    for i, rec in enumerate(corpus.records):
        strata.setdefault(rec.doc_type, []).append(i)
    values = [0.0] * len(corpus.records)
    for positions in strata.values():
        assignment = assign_quantiles([corpus.records[i].citations for i in positions])
        for pos, q in zip(positions, assignment.q):
            values[pos] = q
    return tuple(values)


def stratified_mccall_z(corpus: Corpus) -> ZAssignment:
    """Area transformation within document-type strata.

    Each stratum is its own reference set (distribution-free control for
    the document-type mix); a stratum of size one yields z = 0.
    """
    return ZAssignment(
        tuple(inv_norm_cdf(q / 100.0) for q in stratified_quantiles(corpus)),
        "by-doc-type")


def t_scores(z: ZAssignment) -> tuple[float, ...]:
    """Classic T rescale of the deviates: T = 50 + 10 z."""
    return tuple(50.0 + 10.0 * v for v in z.values)
