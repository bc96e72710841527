import math
import random

import pytest

from citemetrics import (
    assign_quantiles,
    inv_norm_cdf,
    mccall_z,
    norm_cdf,
    stratified_mccall_z,
    stratified_quantiles,
    t_scores,
)

from conftest import make_corpus
from oracles import inv_phi_bisect, phi


class TestInvNormCdf:
    def test_median_is_zero(self):
        assert inv_norm_cdf(0.5) == 0.0

    def test_upper_tail_value(self):
        # 1.95996398 from numerical inversion of the normal CDF
        assert inv_norm_cdf(0.975) == pytest.approx(1.95996398, abs=1e-6)

    def test_antisymmetry_at_paired_points(self):
        assert inv_norm_cdf(0.025) == pytest.approx(-inv_norm_cdf(0.975), abs=1e-12)

    def test_domain_is_open_unit_interval(self):
        for bad in (0.0, 1.0, -0.1, 1.1):
            with pytest.raises(ValueError):
                inv_norm_cdf(bad)

    def test_against_bisection_oracle(self):
        points = [k / 200 for k in range(1, 200)]
        points += [1e-10, 1e-8, 1e-5, 1 - 1e-5, 1 - 1e-8, 1 - 1e-10]
        for p in points:
            assert inv_norm_cdf(p) == pytest.approx(inv_phi_bisect(p), abs=1e-8)

    def test_antisymmetry_on_grid(self):
        for k in range(1, 500):
            p = k / 500
            assert abs(inv_norm_cdf(p) + inv_norm_cdf(1 - p)) < 1e-9

    def test_round_trip_through_cdf_oracle(self):
        for p in (1e-9, 1e-4, 0.03, 0.25, 0.5, 0.77, 0.999, 1 - 1e-9):
            assert phi(inv_norm_cdf(p)) == pytest.approx(p, abs=1e-8)

    def test_library_cdf_matches_oracle(self):
        for x in (-8.0, -2.5, 0.0, 0.3, 4.0, 9.0):
            assert norm_cdf(x) == pytest.approx(phi(x), abs=0)


class TestMccallZ:
    def test_median_percentile_maps_to_zero(self):
        from citemetrics import QuantileAssignment
        assert mccall_z(QuantileAssignment((50.0,), 1)).values == (0.0,)

    def test_four_distinct_counts(self):
        z = mccall_z(assign_quantiles([0, 1, 2, 3]))
        assert list(z.values) == pytest.approx(
            [-1.1503, -0.3186, 0.3186, 1.1503], abs=1e-4)
        assert z.stratification == "none"

    def test_distinct_inputs_sum_to_zero(self):
        for n in (2, 5, 40, 301):
            values = random.Random(n).sample(range(100_000), n)
            z = mccall_z(assign_quantiles(values))
            assert abs(math.fsum(z.values)) < 1e-9

    def test_strictly_increasing_in_percentile(self):
        z = mccall_z(assign_quantiles(list(range(50))))
        pairs = sorted(zip(assign_quantiles(list(range(50))).q, z.values))
        for (q1, z1), (q2, z2) in zip(pairs, pairs[1:]):
            if q1 < q2:
                assert z1 < z2


class TestStratifiedMccallZ:
    def test_single_doc_type_equals_pooled(self):
        corpus = make_corpus({"A": [0, 1], "B": [2, 3]})
        pooled = mccall_z(assign_quantiles(corpus.citations()))
        stratified = stratified_mccall_z(corpus)
        assert stratified.values == pooled.values
        assert stratified.stratification == "by-doc-type"

    def test_singleton_stratum_gets_zero(self):
        corpus = make_corpus(
            {"A": [5, 9]}, doc_types={"A": ["article", "editorial"]})
        z = stratified_mccall_z(corpus)
        assert z.values[1] == 0.0

    def test_two_strata_reference_values(self):
        corpus = make_corpus(
            {"A": [0, 1, 10], "B": [2, 3, 20]},
            doc_types={"A": ["article", "article", "review"],
                       "B": ["article", "article", "review"]})
        z = stratified_mccall_z(corpus)
        # articles [0,1,2,3] transform as the pooled example; reviews [10,20]
        # sit at the quartiles of their own stratum
        assert z.values[0] == pytest.approx(-1.1503, abs=1e-4)
        assert z.values[1] == pytest.approx(-0.3186, abs=1e-4)
        assert z.values[2] == pytest.approx(-0.6745, abs=1e-4)
        assert z.values[5] == pytest.approx(0.6745, abs=1e-4)

    def test_stratum_sums_vanish_when_counts_distinct(self):
        corpus = make_corpus(
            {"A": [1, 4, 9, 16, 25, 36], "B": [2, 3, 50, 60, 70, 80]},
            doc_types={"A": ["article"] * 3 + ["review"] * 3,
                       "B": ["article"] * 3 + ["review"] * 3})
        z = stratified_mccall_z(corpus)
        for doc_type in ("article", "review"):
            member = [v for v, rec in zip(z.values, corpus.records)
                      if rec.doc_type == doc_type]
            assert abs(math.fsum(member)) < 1e-9

    def test_outlier_invariance_carries_through(self):
        base = make_corpus({"A": [0, 3, 8, 270], "B": [1, 2, 5, 6]})
        grown = make_corpus({"A": [0, 3, 8, 270 + 10**6], "B": [1, 2, 5, 6]})
        assert stratified_mccall_z(base).values == stratified_mccall_z(grown).values
        assert stratified_quantiles(base) == stratified_quantiles(grown)


class TestTScores:
    def test_linear_rescale(self):
        z = mccall_z(assign_quantiles([0, 1, 2, 3]))
        expected = tuple(50.0 + 10.0 * v for v in z.values)
        assert t_scores(z) == expected
