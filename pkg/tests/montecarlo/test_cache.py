"""Tests for the critical-value cache."""

import json

import pytest

from intervallum.errors import InputError
from intervallum.montecarlo import CriticalValueCache
from intervallum.statistics import HFunction, StatisticSpec, parse_statistic


@pytest.fixture
def greenwood():
    return parse_statistic("greenwood")


class TestCriticalValueCache:
    """Keys, persistence and malformed files."""

    def test_miss_then_hit(self, greenwood):
        cache = CriticalValueCache()
        assert cache.get(greenwood, 10, 0.05, 1000, 1) is None
        cache.put(greenwood, 10, 0.05, 1000, 1, 1.75)
        assert cache.get(greenwood, 10, 0.05, 1000, 1) == 1.75

    def test_centre_outward_shares_entries(self, greenwood):
        cache = CriticalValueCache()
        cache.put(greenwood, 10, 0.05, 1000, 1, 1.75)
        assert cache.get(parse_statistic("greenwood:co"), 10, 0.05, 1000, 1) == 1.75

    @pytest.mark.parametrize(
        "n_obs, alpha, replications, seed",
        [(11, 0.05, 1000, 1), (10, 0.1, 1000, 1), (10, 0.05, 999, 1), (10, 0.05, 1000, 2)],
    )
    def test_key_components(self, greenwood, n_obs, alpha, replications, seed):
        cache = CriticalValueCache()
        cache.put(greenwood, 10, 0.05, 1000, 1, 1.75)
        assert cache.get(greenwood, n_obs, alpha, replications, seed) is None

    def test_key_format(self, greenwood):
        key = CriticalValueCache.key(greenwood, 10, 0.05, 1000, 1)
        assert key == "greenwood|m=1|disjoint|single|n=10|alpha=0.05|reps=1000|philox4x64-10|seed=1"

    def test_custom_functions_are_not_cached(self):
        spec = StatisticSpec(HFunction.custom("cube", lambda x: x**3))
        cache = CriticalValueCache()
        cache.put(spec, 10, 0.05, 1000, 1, 3.0)
        assert len(cache) == 0
        assert cache.get(spec, 10, 0.05, 1000, 1) is None

    def test_save_and_reload(self, tmp_path, greenwood):
        path = tmp_path / "nested" / "cv.json"
        cache = CriticalValueCache(path)
        cache.put(greenwood, 10, 0.05, 1000, 1, 1.75)
        cache.save()

        payload = json.loads(path.read_text())
        assert payload["version"] == 1
        reloaded = CriticalValueCache(path)
        assert CriticalValueCache.key(greenwood, 10, 0.05, 1000, 1) in reloaded
        assert reloaded.get(greenwood, 10, 0.05, 1000, 1) == 1.75

    def test_save_skips_clean_cache(self, tmp_path):
        path = tmp_path / "cv.json"
        CriticalValueCache(path).save()
        assert not path.exists()

    @pytest.mark.parametrize("content", ["not json", "[]", '{"version": 99, "entries": {}}'])
    def test_malformed_file(self, tmp_path, content):
        path = tmp_path / "cv.json"
        path.write_text(content)
        with pytest.raises(InputError, match="malformed"):
            CriticalValueCache(path)
