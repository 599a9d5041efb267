"""Simulated null distributions of spacings statistics.

Statistics are distribution-free, so every null replication draws U(0,1)
samples. Usual and centre-outward versions of a statistic share one null
distribution (keyed by StatisticSpec.null_key), simulated with the usual
ordering. Replication r of sample size n always reads the same uniforms of
the ("null", n) substream, whichever statistics are simulated alongside it.
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from intervallum.errors import DomainError
from intervallum.infra.observability import (
    append_run_segment,
    log_simulation_finish,
    log_simulation_start,
    run_scope,
    set_run_id,
)
from intervallum.montecarlo.cache import CriticalValueCache
from intervallum.montecarlo.parallel import chunk_ranges, map_ordered
from intervallum.sampling.rng import RNG_ALGORITHM, RngStream
from intervallum.spacings.construction import validate_scheme
from intervallum.spacings.models import Ordering, SpacingScheme
from intervallum.statistics.evaluation import evaluate_matrix
from intervallum.statistics.models import HFunction, StatisticSpec

logger = logging.getLogger(__name__)

DEFAULT_CHUNK_SIZE = 2_000


@dataclass(frozen=True, eq=False)
class NullDistribution:
    """Sorted simulated null values of one statistic at one sample size.

    Attributes:
        null_key: StatisticSpec.null_key of the statistic
        n_obs: Observations per simulated sample
        values: Simulated statistics, ascending
        seed: Master seed of the simulation
    """

    null_key: str
    n_obs: int
    values: NDArray[np.float64]
    seed: int

    def __post_init__(self) -> None:
        """Sort and freeze the simulated values."""
        values = np.sort(np.asarray(self.values, dtype=np.float64))
        if values.size == 0:
            raise DomainError("a null distribution needs at least one replication")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def replications(self) -> int:
        return int(self.values.size)

    @property
    def algorithm(self) -> str:
        return RNG_ALGORITHM

    def critical_value(self, alpha: float) -> float:
        """Empirical (1 - alpha) quantile at position (1 - alpha)(R + 1), clamped to the data.

        alpha = 1 gives the smallest simulated value; alpha near 0 the largest.

        Raises:
            DomainError: If alpha is not in (0, 1]
        """
        if not 0.0 < alpha <= 1.0:
            raise DomainError("alpha must lie in (0, 1]", {"alpha": alpha})
        return float(np.quantile(self.values, 1.0 - alpha, method="weibull"))

    def p_value(self, observed: float) -> float:
        """(1 + #{null values >= observed}) / (R + 1)."""
        exceed = self.replications - int(np.searchsorted(self.values, observed, side="left"))
        return (1.0 + exceed) / (self.replications + 1.0)


def null_representative(spec: StatisticSpec) -> StatisticSpec:
    """The usual-ordering statistic whose null law every spec with this null_key shares."""
    return StatisticSpec(spec.h, spec.scheme.with_ordering(Ordering.USUAL), spec.combined)


def _null_chunk(
    task: tuple[tuple[StatisticSpec, ...], int, RngStream, int, int, str | None],
) -> list[NDArray[np.float64]]:
    specs, n_obs, stream, start, count, run_id = task
    set_run_id(run_id)
    uniforms = stream.replication_block(n_obs, start, count)
    return [evaluate_matrix(spec, uniforms) for spec in specs]


def simulate_null(
    specs: Iterable[StatisticSpec],
    n_obs: int,
    replications: int,
    rng: RngStream,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> dict[str, NullDistribution]:
    """Null distributions of several statistics from shared U(0,1) samples.

    Returns:
        Mapping from null_key to its distribution

    Raises:
        DomainError: If n_obs or replications is not positive
        SchemeError: If a spacing step does not fit n_obs + 1 spacings
    """
    if n_obs < 1:
        raise DomainError("n_obs must be at least 1", {"n_obs": n_obs})
    if replications < 1:
        raise DomainError("replications must be at least 1", {"replications": replications})

    representatives: dict[str, StatisticSpec] = {}
    for spec in specs:
        validate_scheme(spec.scheme, n_obs + 1)
        representatives.setdefault(spec.null_key, null_representative(spec))
    keys = sorted(representatives)
    ordered = tuple(representatives[key] for key in keys)

    stream = rng.substream("null", n_obs)
    with run_scope("montecarlo.null", logger, segment=f"N{n_obs}", n_obs=n_obs) as run_id:
        log_simulation_start(
            logger,
            "montecarlo.null",
            replications,
            rng.master_seed,
            n_obs=n_obs,
            statistics=keys,
            workers=workers,
        )
        tasks = [
            (ordered, n_obs, stream, start, count, append_run_segment(run_id, f"C{index:04d}"))
            for index, (start, count) in enumerate(chunk_ranges(replications, chunk_size))
        ]
        chunks = map_ordered(_null_chunk, tasks, workers)
        set_run_id(run_id)
        log_simulation_finish(logger, "montecarlo.null", replications, n_obs=n_obs)

    return {
        key: NullDistribution(
            null_key=key,
            n_obs=n_obs,
            values=np.concatenate([chunk[i] for chunk in chunks]),
            seed=rng.master_seed,
        )
        for i, key in enumerate(keys)
    }


def critical_value(
    h: HFunction,
    scheme: SpacingScheme,
    n_obs: int,
    alpha: float,
    replications: int,
    rng: RngStream,
    *,
    combined: bool = False,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> float:
    """Upper alpha critical value of W(h) under the uniform null.

    The same for usual and centre-outward spacings; bit-identical for a fixed rng.
    """
    spec = StatisticSpec(h, scheme, combined)
    distributions = simulate_null([spec], n_obs, replications, rng, workers, chunk_size)
    return distributions[spec.null_key].critical_value(alpha)


def null_critical_values(
    specs: Iterable[StatisticSpec],
    n_obs: int,
    alpha: float,
    replications: int,
    rng: RngStream,
    cache: CriticalValueCache | None = None,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
) -> dict[str, float]:
    """Critical values of several statistics, simulating only what the cache lacks.

    Returns:
        Mapping from null_key to critical value
    """
    values: dict[str, float] = {}
    missing: list[StatisticSpec] = []
    for spec in specs:
        if spec.null_key in values or any(m.null_key == spec.null_key for m in missing):
            continue
        cached = None
        if cache is not None:
            cached = cache.get(spec, n_obs, alpha, replications, rng.master_seed)
        if cached is None:
            missing.append(spec)
        else:
            values[spec.null_key] = cached

    if missing:
        simulated = simulate_null(missing, n_obs, replications, rng, workers, chunk_size)
        for spec in missing:
            value = simulated[spec.null_key].critical_value(alpha)
            values[spec.null_key] = value
            if cache is not None:
                cache.put(spec, n_obs, alpha, replications, rng.master_seed, value)

    return values
