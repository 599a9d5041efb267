"""Tests for score function and statistic models."""

import numpy as np
import pytest

from intervallum.errors import DomainError
from intervallum.spacings import Layout, Ordering, SpacingScheme
from intervallum.statistics import GREENWOOD, MORAN, HFunction, HKind, StatisticSpec


class TestHFunction:
    """Score function construction."""

    def test_builtin_symbols(self):
        assert GREENWOOD.symbol == "G"
        assert MORAN.symbol == "L"
        assert str(GREENWOOD) == "greenwood"

    def test_custom(self):
        cube = HFunction.custom("cube", lambda x: x**3, symbol="C3")
        assert cube.kind is HKind.CUSTOM
        assert cube.symbol == "C3"
        np.testing.assert_array_equal(cube(np.array([2.0])), [8.0])

    def test_custom_symbol_defaults_to_name(self):
        assert HFunction.custom("cube", lambda x: x**3).symbol == "cube"

    def test_custom_must_be_finite(self):
        with pytest.raises(DomainError, match="finite"):
            HFunction.custom("bad", lambda x: np.log(x - 1.0))

    def test_custom_must_be_vectorised(self):
        with pytest.raises(DomainError, match="vectorised"):
            HFunction.custom("scalar", lambda x: 1.0)

    def test_builtin_kind_takes_no_func(self):
        with pytest.raises(DomainError):
            HFunction(HKind.GREENWOOD, "g2", "G", func=lambda x: x)

    def test_empty_name(self):
        with pytest.raises(DomainError):
            HFunction(HKind.GREENWOOD, "", "G")


class TestStatisticSpec:
    """Spec strings, labels and null keys."""

    @pytest.mark.parametrize(
        "scheme, combined, spec, label",
        [
            (SpacingScheme(), False, "greenwood", "G"),
            (SpacingScheme(Ordering.CENTRE_OUTWARD), False, "greenwood:co", "G*"),
            (SpacingScheme(), True, "greenwood:max", "Gmax"),
            (
                SpacingScheme(Ordering.USUAL, 2, Layout.OVERLAPPING),
                False,
                "greenwood:m=2:overlap",
                "G[m=2,overlap]",
            ),
            (
                SpacingScheme(Ordering.CENTRE_OUTWARD, 3, Layout.DISJOINT),
                False,
                "greenwood:co:m=3:disjoint",
                "G*[m=3,disjoint]",
            ),
        ],
    )
    def test_spec_and_label(self, scheme, combined, spec, label):
        statistic_spec = StatisticSpec(GREENWOOD, scheme, combined)
        assert statistic_spec.spec == spec
        assert statistic_spec.label == label
        assert str(statistic_spec) == spec

    def test_usual_and_co_share_null_key(self):
        usual = StatisticSpec(GREENWOOD)
        co = StatisticSpec(GREENWOOD, SpacingScheme(Ordering.CENTRE_OUTWARD))
        assert usual.null_key == co.null_key == "greenwood|m=1|disjoint|single"

    def test_combined_has_own_null_key(self):
        assert StatisticSpec(GREENWOOD, combined=True).null_key.endswith("|max")

    def test_combined_requires_simple_usual_scheme(self):
        with pytest.raises(DomainError):
            StatisticSpec(GREENWOOD, SpacingScheme(Ordering.CENTRE_OUTWARD), combined=True)
