import math
import random

import pytest

from citemetrics import (
    ClassBand,
    ClassScheme,
    QuantileAssignment,
    assign_classes,
    assign_quantiles,
    default_pr6_scheme,
    parse_scheme_spec,
)

from oracles import brute_classes, brute_quantiles


class TestAssignQuantiles:
    def test_distinct_four(self):
        assert assign_quantiles([0, 1, 2, 3]).q == (12.5, 37.5, 62.5, 87.5)

    def test_single_item_is_median(self):
        assert assign_quantiles([7]).q == (50.0,)

    def test_full_tie_pair(self):
        assert assign_quantiles([5, 5]).q == (50.0, 50.0)

    def test_empty_input_rejected(self):
        with pytest.raises(ValueError):
            assign_quantiles([])

    def test_negative_input_rejected(self):
        with pytest.raises(ValueError):
            assign_quantiles([3, -1])

    def test_matches_brute_force_counting(self):
        rng = random.Random(101)
        for _ in range(50):
            counts = [rng.randint(0, 12) for _ in range(rng.randint(1, 40))]
            assert list(assign_quantiles(counts).q) == brute_quantiles(counts)

    def test_open_interval_and_order(self):
        rng = random.Random(7)
        counts = [rng.randint(0, 30) for _ in range(500)]
        assignment = assign_quantiles(counts)
        assert all(0.0 < q < 100.0 for q in assignment.q)
        for (ci, qi) in zip(counts, assignment.q):
            for (cj, qj) in zip(counts, assignment.q):
                if ci < cj:
                    assert qi < qj
                elif ci == cj:
                    assert qi == qj

    def test_distinct_values_hit_hazen_positions(self):
        n = 37
        values = random.Random(3).sample(range(1000), n)
        expected = sorted(100.0 * (i - 0.5) / n for i in range(1, n + 1))
        assert sorted(assign_quantiles(values).q) == pytest.approx(expected, abs=0)

    def test_mean_percentile_is_fifty_for_distinct_sets(self):
        for n in (1, 2, 7, 100, 233):
            values = random.Random(n).sample(range(10_000), n)
            mean = math.fsum(assign_quantiles(values).q) / n
            assert abs(mean - 50.0) < 1e-9


class TestMonotoneAndOutlierInvariance:
    def test_strictly_increasing_transforms_change_nothing(self):
        rng = random.Random(55)
        counts = [rng.randint(0, 25) for _ in range(80)]
        scheme = default_pr6_scheme()
        base_q = assign_quantiles(counts)
        base_cls = assign_classes(base_q, scheme)
        for transform in (lambda c: 2 * c, lambda c: c * c + 3, lambda c: c + 7):
            mapped = [transform(c) for c in counts]
            mapped_q = assign_quantiles(mapped)
            assert mapped_q.q == base_q.q
            assert assign_classes(mapped_q, scheme).indices == base_cls.indices

    def test_growing_the_strict_maximum_changes_nothing(self):
        counts = [0, 3, 3, 8, 21, 270]
        scheme = default_pr6_scheme()
        base = assign_quantiles(counts)
        base_cls = assign_classes(base, scheme)
        for delta in (1, 270, 10**6):
            grown = counts[:-1] + [counts[-1] + delta]
            grown_q = assign_quantiles(grown)
            assert grown_q.q == base.q
            assert assign_classes(grown_q, scheme).indices == base_cls.indices


class TestDefaultScheme:
    def test_band_widths(self):
        scheme = default_pr6_scheme()
        assert [band.upper - band.lower for band in scheme.bands] == [50, 25, 15, 5, 4, 1]

    def test_weights_one_through_six(self):
        assert default_pr6_scheme().weights() == (1, 2, 3, 4, 5, 6)

    def test_partition_of_unit_interval(self):
        scheme = default_pr6_scheme()
        assert scheme.bands[0].lower == 0.0
        assert scheme.bands[-1].upper == 100.0
        for prev, band in zip(scheme.bands, scheme.bands[1:]):
            assert prev.upper == band.lower


class TestSchemeValidation:
    def test_gap_rejected(self):
        with pytest.raises(ValueError):
            ClassScheme((ClassBand(0, 40, 1, "a"), ClassBand(50, 100, 2, "b")))

    def test_non_increasing_weights_rejected(self):
        with pytest.raises(ValueError):
            ClassScheme((ClassBand(0, 50, 2, "a"), ClassBand(50, 100, 2, "b")))

    def test_weight_below_one_rejected(self):
        with pytest.raises(ValueError):
            ClassScheme((ClassBand(0, 100, 0, "a"),))

    def test_parse_spec_round_trip(self):
        scheme = parse_scheme_spec("0:50:1,50:75:2,75:90:3,90:95:4,95:99:5,99:100:6")
        assert [(b.lower, b.upper, b.weight) for b in scheme.bands] == \
            [(b.lower, b.upper, b.weight) for b in default_pr6_scheme().bands]

    def test_parse_spec_bad_triple(self):
        with pytest.raises(ValueError):
            parse_scheme_spec("0:50")


class TestAssignClasses:
    def test_boundary_is_lower_inclusive(self):
        explicit = QuantileAssignment((99.5, 50.0), 2)
        assert assign_classes(explicit, default_pr6_scheme()).indices == (6, 2)

    def test_two_hundred_distinct_counts_bin_as_expected(self):
        assignment = assign_quantiles(list(range(200)))
        classes = assign_classes(assignment, default_pr6_scheme())
        tally = [classes.indices.count(k) for k in range(1, 7)]
        assert tally == [100, 50, 30, 10, 8, 2]

    def test_class_counts_sum_to_reference_size(self):
        rng = random.Random(17)
        counts = [rng.randint(0, 9) for _ in range(137)]
        classes = assign_classes(assign_quantiles(counts), default_pr6_scheme())
        assert len(classes.indices) == 137

    def test_matches_brute_force_scan(self):
        rng = random.Random(23)
        scheme = default_pr6_scheme()
        counts = [rng.randint(0, 50) for _ in range(250)]
        assignment = assign_quantiles(counts)
        assert list(assign_classes(assignment, scheme).indices) == \
            brute_classes(assignment.q, scheme)
