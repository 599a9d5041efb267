"""Tests for the score function registry and spec parsing."""

import pytest

from intervallum.errors import SpecParseError
from intervallum.spacings import Layout, Ordering
from intervallum.statistics import (
    GREENWOOD,
    RAO,
    HFunction,
    HFunctionRegistry,
    get_default_registry,
    parse_statistic,
)


@pytest.fixture
def registry():
    registry = HFunctionRegistry()
    registry.register(GREENWOOD)
    return registry


class TestHFunctionRegistry:
    """Registration and lookup."""

    def test_get_is_case_insensitive(self, registry):
        assert registry.get("GreenWood") is GREENWOOD

    def test_duplicate_registration(self, registry):
        with pytest.raises(ValueError, match="already registered"):
            registry.register(GREENWOOD)

    def test_register_under_alias(self, registry):
        registry.register(GREENWOOD, key="g")
        assert registry.has("G")

    def test_unknown_lists_available(self, registry):
        with pytest.raises(KeyError, match="Available score functions: greenwood"):
            registry.get("moran")

    def test_unregister_and_clear(self, registry):
        registry.register(RAO)
        registry.unregister("rao")
        assert registry.list_keys() == ["greenwood"]
        registry.clear()
        assert registry.list_keys() == []
        with pytest.raises(KeyError):
            registry.unregister("rao")

    def test_default_registry_has_builtins(self):
        assert set(get_default_registry().list_keys()) >= {"greenwood", "moran", "rao", "entropy"}

    def test_custom_function_becomes_parseable(self, registry):
        registry.register(HFunction.custom("cube", lambda x: x**3))
        assert registry.parse_statistic("cube:co").h.name == "cube"


class TestParseStatistic:
    """Spec string grammar."""

    def test_plain(self):
        spec = parse_statistic("greenwood")
        assert spec.h is GREENWOOD
        assert spec.scheme.ordering is Ordering.USUAL
        assert spec.scheme.m == 1
        assert not spec.combined

    def test_co(self):
        assert parse_statistic("Moran:CO").scheme.ordering is Ordering.CENTRE_OUTWARD

    def test_max(self):
        assert parse_statistic("rao:max").combined

    def test_m_step_defaults_to_disjoint(self):
        spec = parse_statistic("entropy:co:m=3")
        assert spec.scheme.m == 3
        assert spec.scheme.layout is Layout.DISJOINT

    def test_overlap(self):
        assert parse_statistic("greenwood:m=2:overlap").scheme.layout is Layout.OVERLAPPING

    @pytest.mark.parametrize(
        "spec", ["greenwood", "greenwood:co", "moran:max", "rao:m=2:overlap", "entropy:co:m=4:disjoint"]
    )
    def test_canonical_round_trip(self, spec):
        assert parse_statistic(spec).spec == spec

    @pytest.mark.parametrize(
        "spec, match",
        [
            ("bogus", "Available score functions"),
            ("greenwood:bogus", "Available options"),
            ("greenwood:co:co", "repeated"),
            ("greenwood:m=0", "at least 1"),
            ("greenwood:m=x", "invalid step"),
            ("greenwood:overlap", "requires m"),
            ("greenwood:co:max", "takes no other option"),
            ("greenwood:max:m=2", "takes no other option"),
        ],
    )
    def test_errors(self, spec, match):
        with pytest.raises(SpecParseError, match=match):
            parse_statistic(spec)
