"""JSON file cache of simulated critical values."""

import json
import logging
from pathlib import Path

from intervallum.errors import InputError
from intervallum.infra.observability import log_cache_event
from intervallum.sampling.rng import RNG_ALGORITHM
from intervallum.statistics.models import HKind, StatisticSpec

logger = logging.getLogger(__name__)

CACHE_FORMAT_VERSION = 1


class CriticalValueCache:
    """Critical values keyed by (h, m, layout, n_obs, alpha, replications, rng algorithm, seed).

    Keys come from StatisticSpec.null_key, so usual and centre-outward
    statistics share entries. Custom score functions are never cached: their
    name does not identify the function.
    """

    def __init__(self, path: Path | None = None) -> None:
        """Load entries from path if it exists.

        Raises:
            InputError: If the file exists but is not a cache file
        """
        self._path = Path(path) if path is not None else None
        self._entries: dict[str, float] = {}
        self._dirty = False
        if self._path is not None and self._path.exists():
            self._entries = self._read(self._path)

    @staticmethod
    def _read(path: Path) -> dict[str, float]:
        try:
            payload = json.loads(path.read_text(encoding="utf-8"))
            if payload.get("version") != CACHE_FORMAT_VERSION:
                raise ValueError(f"unsupported cache version {payload.get('version')!r}")
            return {str(key): float(value) for key, value in payload["entries"].items()}
        except (OSError, ValueError, KeyError, TypeError, AttributeError) as e:
            raise InputError(f"malformed critical-value cache '{path}'", {"error": str(e)}) from e

    @staticmethod
    def key(spec: StatisticSpec, n_obs: int, alpha: float, replications: int, seed: int) -> str:
        return "|".join(
            [
                spec.null_key,
                f"n={n_obs}",
                f"alpha={alpha!r}",
                f"reps={replications}",
                RNG_ALGORITHM,
                f"seed={seed}",
            ]
        )

    @staticmethod
    def cacheable(spec: StatisticSpec) -> bool:
        return spec.h.kind is not HKind.CUSTOM

    def get(
        self, spec: StatisticSpec, n_obs: int, alpha: float, replications: int, seed: int
    ) -> float | None:
        if not self.cacheable(spec):
            return None
        key = self.key(spec, n_obs, alpha, replications, seed)
        value = self._entries.get(key)
        log_cache_event(logger, "hit" if value is not None else "miss", key)
        return value

    def put(
        self,
        spec: StatisticSpec,
        n_obs: int,
        alpha: float,
        replications: int,
        seed: int,
        value: float,
    ) -> None:
        if not self.cacheable(spec):
            return
        key = self.key(spec, n_obs, alpha, replications, seed)
        self._entries[key] = float(value)
        self._dirty = True
        log_cache_event(logger, "write", key, value=value)

    def save(self) -> None:
        """Write entries back to the cache file, if any changed."""
        if self._path is None or not self._dirty:
            return
        self._path.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            "version": CACHE_FORMAT_VERSION,
            "entries": dict(sorted(self._entries.items())),
        }
        self._path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
        self._dirty = False

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, key: str) -> bool:
        return key in self._entries
