"""Tests for statistic evaluation."""

import math

import numpy as np
import pytest

from intervallum.errors import DomainError
from intervallum.sampling import RngStream
from intervallum.spacings import Ordering, Sample, simple_spacings
from intervallum.statistics import (
    BUILTIN_H_FUNCTIONS,
    ENTROPY,
    GREENWOOD,
    MORAN,
    RAO,
    HFunction,
    combined_max_statistic,
    evaluate,
    evaluate_matrix,
    h_eval,
    parse_statistic,
    statistic,
)


class TestHEval:
    """Score function values."""

    @pytest.mark.parametrize(
        "h, x, expected",
        [
            (GREENWOOD, 1.0, 1.0),
            (GREENWOOD, 2.0, 4.0),
            (MORAN, 1.0, 0.0),
            (RAO, 1.0, 0.0),
            (RAO, 0.25, 0.75),
            (ENTROPY, 1.0, 0.0),
            (ENTROPY, 0.0, 0.0),
            (ENTROPY, math.e, math.e),
        ],
    )
    def test_values(self, h, x, expected):
        assert h_eval(h, x) == pytest.approx(expected, abs=1e-15)

    def test_moran_at_zero_is_infinite(self):
        assert h_eval(MORAN, 0.0) == math.inf

    def test_vectorised(self):
        np.testing.assert_array_equal(h_eval(GREENWOOD, [0.0, 1.0, 3.0]), [0.0, 1.0, 9.0])

    def test_negative_argument(self):
        with pytest.raises(DomainError):
            h_eval(GREENWOOD, -0.1)


class TestStatistic:
    """W(h) on concrete samples."""

    def test_greenwood_example(self):
        gaps = simple_spacings(Sample.of([0.1, 0.5, 0.9]))
        value = statistic(gaps, GREENWOOD)
        assert value.value == pytest.approx(1.36, abs=1e-12)
        assert value.n_effective == 4
        assert not value.degenerate

    @pytest.mark.parametrize("h", BUILTIN_H_FUNCTIONS)
    def test_equal_gaps_give_h_of_one(self, h):
        gaps = simple_spacings(Sample.of([0.25, 0.5, 0.75]))
        assert statistic(gaps, h).value == pytest.approx(float(h(1.0)), abs=1e-12)

    @pytest.mark.parametrize("h", BUILTIN_H_FUNCTIONS)
    @pytest.mark.parametrize("ordering", list(Ordering))
    def test_jensen_lower_bound(self, h, ordering):
        sample = Sample.of(RngStream(21).uniforms(50))
        value = statistic(simple_spacings(sample, ordering), h).value
        assert value >= float(h(1.0)) - 1e-12

    def test_moran_duplicate_is_degenerate(self):
        value = statistic(simple_spacings(Sample.of([0.3, 0.3, 0.6])), MORAN)
        assert value.value == math.inf
        assert value.degenerate

    def test_m_step_scaling(self):
        sample = Sample.of([0.1, 0.5, 0.9])
        spec = parse_statistic("greenwood:m=2:overlap")
        # windows (0.5, 0.8, 0.5) scaled by n/m = 2
        expected = (1.0**2 + 1.6**2 + 1.0**2) / 3
        assert evaluate(spec, sample).value == pytest.approx(expected, abs=1e-12)


class TestCombined:
    """max(W, W*)."""

    def test_example(self):
        sample = Sample.of([0.25, 0.75])
        usual = statistic(simple_spacings(sample, Ordering.USUAL), GREENWOOD)
        co = statistic(simple_spacings(sample, Ordering.CENTRE_OUTWARD), GREENWOOD)
        combined = combined_max_statistic(sample, GREENWOOD)

        assert usual.value == pytest.approx(1.125)
        assert co.value == pytest.approx(1.5)
        assert combined.value == pytest.approx(1.5)
        assert combined.combined
        assert combined.spec.spec == "greenwood:max"

    def test_evaluate_dispatches_combined(self):
        sample = Sample.of([0.25, 0.75])
        assert evaluate(parse_statistic("greenwood:max"), sample).value == pytest.approx(1.5)


class TestEvaluateMatrix:
    """Batch evaluation agrees with per-sample evaluation."""

    @pytest.mark.parametrize(
        "spec",
        ["greenwood", "greenwood:co", "moran:max", "rao:m=2:overlap", "entropy:co:m=4"],
    )
    def test_rows_match(self, spec):
        statistic_spec = parse_statistic(spec)
        values = RngStream(5).replication_block(19, 0, 8)
        batch = evaluate_matrix(statistic_spec, values)
        singles = [evaluate(statistic_spec, Sample.of(row)).value for row in values]
        np.testing.assert_allclose(batch, singles, rtol=1e-12)

    def test_custom_h(self):
        cube = HFunction.custom("cube", lambda x: x**3)
        value = statistic(simple_spacings(Sample.of([0.1, 0.5, 0.9])), cube).value
        assert value == pytest.approx((2 * 0.4**3 + 2 * 1.6**3) / 4)
