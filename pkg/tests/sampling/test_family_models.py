"""Tests for alternative family definitions and spec strings."""

import pytest

from intervallum.errors import DomainError, SpecParseError
from intervallum.sampling import AlternativeFamily, FamilyKind


class TestAlternativeFamily:
    """Family validation."""

    def test_uniform_takes_no_parameter(self):
        with pytest.raises(DomainError, match="no shape parameter"):
            AlternativeFamily(FamilyKind.UNIFORM, 1.0)

    @pytest.mark.parametrize("kind", [FamilyKind.A, FamilyKind.B, FamilyKind.C, FamilyKind.BETA])
    def test_shaped_kinds_require_k(self, kind):
        with pytest.raises(DomainError, match="requires a shape parameter"):
            AlternativeFamily(kind)

    @pytest.mark.parametrize("k", [0.0, -1.5, float("inf"), float("nan")])
    def test_k_must_be_positive_and_finite(self, k):
        with pytest.raises(DomainError, match="positive"):
            AlternativeFamily(FamilyKind.A, k)

    @pytest.mark.parametrize("kind", [FamilyKind.A, FamilyKind.B, FamilyKind.C, FamilyKind.BETA])
    def test_k_one_is_uniform(self, kind):
        assert AlternativeFamily(kind, 1.0).is_uniform

    def test_symmetry(self):
        assert not AlternativeFamily(FamilyKind.A, 1.5).is_symmetric
        assert AlternativeFamily(FamilyKind.A, 1.0).is_symmetric
        assert AlternativeFamily(FamilyKind.B, 1.5).is_symmetric
        assert AlternativeFamily(FamilyKind.BETA, 0.5).is_symmetric

    def test_labels(self):
        assert AlternativeFamily.uniform().label == "U(0,1)"
        assert AlternativeFamily(FamilyKind.A, 1.5).label == "A_1.5"
        assert AlternativeFamily(FamilyKind.BETA, 2.5).label == "Beta(2.5,2.5)"


class TestFromSpec:
    """Family spec grammar."""

    @pytest.mark.parametrize(
        "spec, expected",
        [
            ("uniform", AlternativeFamily.uniform()),
            ("A:1.5", AlternativeFamily(FamilyKind.A, 1.5)),
            ("b:1.5", AlternativeFamily(FamilyKind.B, 1.5)),
            (" C:2 ", AlternativeFamily(FamilyKind.C, 2.0)),
            ("Beta:0.5", AlternativeFamily(FamilyKind.BETA, 0.5)),
        ],
    )
    def test_parses(self, spec, expected):
        assert AlternativeFamily.from_spec(spec) == expected

    @pytest.mark.parametrize("spec", ["uniform", "A:1.5", "beta:2.5", "C:0.123456789"])
    def test_spec_is_canonical(self, spec):
        assert AlternativeFamily.from_spec(spec).spec == spec

    @pytest.mark.parametrize(
        "spec, message",
        [
            ("gamma:2", "Unknown family"),
            ("A", "requires ':<k>'"),
            ("A:abc", "invalid shape parameter"),
            ("A:-1", "positive"),
            ("uniform:1", "takes no parameter"),
        ],
    )
    def test_rejects_malformed(self, spec, message):
        with pytest.raises(SpecParseError, match=message):
            AlternativeFamily.from_spec(spec)

    def test_spec_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            AlternativeFamily.from_spec("D:1")
