"""Tests for centre-outward ranks and spacing constructions."""

import numpy as np
import pytest

from intervallum.errors import DomainError, SchemeError
from intervallum.sampling import RngStream
from intervallum.spacings import (
    Layout,
    Ordering,
    Sample,
    SpacingScheme,
    co_rank,
    gaps_matrix,
    halfspace_depth,
    m_step_spacings,
    simple_spacings,
    simplicial_depth,
)

THREE = Sample.of([0.1, 0.5, 0.9])


class TestCoRank:
    """R = |2x - 1|."""

    @pytest.mark.parametrize("x, expected", [(0.5, 0.0), (0.0, 1.0), (1.0, 1.0), (0.9, 0.8)])
    def test_values(self, x, expected):
        assert co_rank(x) == pytest.approx(expected, abs=1e-15)

    def test_domain_error(self):
        with pytest.raises(DomainError):
            co_rank(1.2)

    def test_depths_induce_the_same_ordering(self):
        x = np.linspace(0.0, 1.0, 101)
        ranks = co_rank(x)
        # deeper points have smaller ranks under both depths
        assert np.all(np.diff(ranks[np.argsort(-halfspace_depth(x), kind="stable")]) >= -1e-15)
        assert np.all(np.diff(ranks[np.argsort(-simplicial_depth(x), kind="stable")]) >= -1e-15)


class TestSimpleSpacings:
    """Usual and centre-outward simple spacings."""

    def test_usual(self):
        gaps = simple_spacings(THREE, Ordering.USUAL)
        np.testing.assert_allclose(gaps.gaps, [0.1, 0.4, 0.4, 0.1], atol=1e-15)
        assert gaps.n_effective == 4

    def test_centre_outward(self):
        gaps = simple_spacings(THREE, Ordering.CENTRE_OUTWARD)
        np.testing.assert_allclose(gaps.gaps, [0.0, 0.8, 0.0, 0.2], atol=1e-15)

    def test_single_median_value(self):
        gaps = simple_spacings(Sample.of([0.5]), Ordering.CENTRE_OUTWARD)
        np.testing.assert_array_equal(gaps.gaps, [0.0, 1.0])

    @pytest.mark.parametrize("ordering", list(Ordering))
    def test_gaps_sum_to_one(self, ordering):
        values = RngStream(3).uniforms(257)
        gaps = simple_spacings(Sample.of(values), ordering)
        assert gaps.gaps.sum() == pytest.approx(1.0, abs=1e-12)
        assert np.all(gaps.gaps >= 0.0)

    def test_permutation_invariance(self):
        values = RngStream(4).uniforms(31)
        shuffled = values[np.random.default_rng(0).permutation(31)]
        for ordering in Ordering:
            assert simple_spacings(Sample.of(values), ordering) == simple_spacings(
                Sample.of(shuffled), ordering
            )

    def test_centre_outward_reflection_symmetry(self):
        sample = Sample.of([0.125, 0.25, 0.625, 0.875])
        assert simple_spacings(sample, Ordering.CENTRE_OUTWARD) == simple_spacings(
            sample.reflected(), Ordering.CENTRE_OUTWARD
        )

    def test_ties_produce_zero_gaps(self):
        gaps = simple_spacings(Sample.of([0.3, 0.3, 0.6]))
        assert 0.0 in gaps.gaps

    def test_empty_sample(self):
        with pytest.raises(DomainError, match="empty"):
            Sample.of([])

    def test_gaps_are_read_only(self):
        gaps = simple_spacings(THREE)
        with pytest.raises(ValueError):
            gaps.gaps[0] = 1.0


class TestMStepSpacings:
    """Higher-order spacings."""

    def test_m_one_matches_simple(self):
        assert m_step_spacings(THREE, SpacingScheme()) == simple_spacings(THREE)

    def test_overlapping(self):
        gaps = m_step_spacings(THREE, SpacingScheme(Ordering.USUAL, 2, Layout.OVERLAPPING))
        np.testing.assert_allclose(gaps.gaps, [0.5, 0.8, 0.5], atol=1e-15)

    def test_disjoint(self):
        gaps = m_step_spacings(THREE, SpacingScheme(Ordering.USUAL, 2, Layout.DISJOINT))
        np.testing.assert_allclose(gaps.gaps, [0.5, 0.5], atol=1e-15)
        assert gaps.gaps.sum() == pytest.approx(1.0, abs=1e-12)

    def test_overlapping_windows_sum_simple_gaps(self):
        sample = Sample.of(RngStream(8).uniforms(40))
        simple = simple_spacings(sample).gaps
        for m in (2, 3, 5):
            gaps = m_step_spacings(sample, SpacingScheme(Ordering.USUAL, m, Layout.OVERLAPPING)).gaps
            expected = np.convolve(simple, np.ones(m), mode="valid")
            np.testing.assert_allclose(gaps, expected, atol=1e-12)

    def test_step_too_large(self):
        with pytest.raises(SchemeError, match="exceeds"):
            m_step_spacings(THREE, SpacingScheme(Ordering.USUAL, 5, Layout.OVERLAPPING))

    def test_disjoint_step_must_divide(self):
        with pytest.raises(SchemeError, match="must divide"):
            m_step_spacings(THREE, SpacingScheme(Ordering.USUAL, 3, Layout.DISJOINT))

    def test_scheme_rejects_zero_step(self):
        with pytest.raises(DomainError):
            SpacingScheme(m=0)


class TestGapsMatrix:
    """Batch kernel agrees with the single-sample API."""

    @pytest.mark.parametrize(
        "scheme",
        [
            SpacingScheme(),
            SpacingScheme(Ordering.CENTRE_OUTWARD),
            SpacingScheme(Ordering.CENTRE_OUTWARD, 2, Layout.OVERLAPPING),
            SpacingScheme(Ordering.USUAL, 4, Layout.DISJOINT),
        ],
    )
    def test_rows_match_single_samples(self, scheme):
        values = RngStream(12).replication_block(19, 0, 5)
        matrix = gaps_matrix(values, scheme)
        for row, gaps in zip(values, matrix, strict=True):
            np.testing.assert_array_equal(gaps, m_step_spacings(Sample.of(row), scheme).gaps)
