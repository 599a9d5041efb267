"""Empirical power studies over (alternative, n, statistic) grids.

Every cell (alternative, n) owns the substream ("cell", family spec, n);
replication r of the cell reads the same uniforms however replications are
chunked or spread over workers, and all statistics of the cell see the same
samples. Rejection counts are integers summed in chunk order.
"""

import logging
import time

import numpy as np
from numpy.typing import NDArray

from intervallum.infra.observability import (
    append_run_segment,
    log_simulation_finish,
    log_simulation_start,
    run_scope,
    set_run_id,
)
from intervallum.montecarlo.cache import CriticalValueCache
from intervallum.montecarlo.models import PowerStudyConfig, PowerTable
from intervallum.montecarlo.null import DEFAULT_CHUNK_SIZE, null_critical_values
from intervallum.montecarlo.parallel import chunk_ranges, map_ordered
from intervallum.sampling.distributions import quantile
from intervallum.sampling.models import AlternativeFamily
from intervallum.sampling.rng import RNG_ALGORITHM, RngStream
from intervallum.statistics.evaluation import evaluate_matrix
from intervallum.statistics.models import StatisticSpec

logger = logging.getLogger(__name__)

_CellTask = tuple[
    AlternativeFamily,
    int,
    tuple[StatisticSpec, ...],
    tuple[float, ...],
    RngStream,
    int,
    int,
    str | None,
]


def cell_stream(root: RngStream, family: AlternativeFamily, n_obs: int) -> RngStream:
    return root.substream("cell", family.spec, n_obs)


def rejection_counts(
    family: AlternativeFamily,
    n_obs: int,
    specs: tuple[StatisticSpec, ...],
    critical_values: tuple[float, ...],
    stream: RngStream,
    start: int,
    count: int,
) -> NDArray[np.int64]:
    """Rejections of every statistic over replications start .. start+count-1 of a cell.

    +inf statistics exceed every finite critical value and count as rejections.
    """
    samples = np.asarray(quantile(family, stream.replication_block(n_obs, start, count)))
    counts = np.empty(len(specs), dtype=np.int64)
    for i, (spec, critical) in enumerate(zip(specs, critical_values, strict=True)):
        counts[i] = int(np.count_nonzero(evaluate_matrix(spec, samples) > critical))
    return counts


def _cell_chunk(task: _CellTask) -> NDArray[np.int64]:
    family, n_obs, specs, critical_values, stream, start, count, run_id = task
    set_run_id(run_id)
    return rejection_counts(family, n_obs, specs, critical_values, stream, start, count)


def power_study(
    config: PowerStudyConfig,
    *,
    workers: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    cache: CriticalValueCache | None = None,
) -> PowerTable:
    """Rejection rates of every statistic on every (alternative, n) cell.

    Critical values come from Monte Carlo null simulation with
    config.null_replications replications, shared by usual and centre-outward
    statistics. The table is identical for a fixed master seed whatever the
    worker count and chunk size.
    """
    root = RngStream(config.master_seed)
    specs = tuple(config.statistic_specs)
    families = config.families
    started = time.perf_counter()

    with run_scope(
        "montecarlo.power_study",
        logger,
        segment="STUDY",
        cells=len(families) * len(config.sample_sizes),
        statistics=list(config.statistics),
    ) as run_id:
        log_simulation_start(
            logger,
            "montecarlo.power_study",
            config.replications,
            config.master_seed,
            null_replications=config.null_replications,
            workers=workers,
        )

        critical: dict[int, tuple[float, ...]] = {}
        for n_obs in config.sample_sizes:
            by_key = null_critical_values(
                specs,
                n_obs,
                config.alpha,
                config.null_replications,
                root,
                cache=cache,
                workers=workers,
                chunk_size=chunk_size,
            )
            critical[n_obs] = tuple(by_key[spec.null_key] for spec in specs)
        set_run_id(run_id)

        rows: list[tuple[str, int]] = []
        tasks: list[_CellTask] = []
        owners: list[int] = []
        for family in families:
            for n_obs in config.sample_sizes:
                row = len(rows)
                rows.append((family.spec, n_obs))
                stream = cell_stream(root, family, n_obs)
                for start, count in chunk_ranges(config.replications, chunk_size):
                    segment = f"R{row:03d}C{start // chunk_size:04d}"
                    tasks.append(
                        (
                            family,
                            n_obs,
                            specs,
                            critical[n_obs],
                            stream,
                            start,
                            count,
                            append_run_segment(run_id, segment),
                        )
                    )
                    owners.append(row)

        results = map_ordered(_cell_chunk, tasks, workers)
        set_run_id(run_id)

        counts = np.zeros((len(rows), len(specs)), dtype=np.int64)
        for row, chunk in zip(owners, results, strict=True):
            counts[row] += chunk

        wall_time = time.perf_counter() - started
        log_simulation_finish(
            logger,
            "montecarlo.power_study",
            config.replications,
            duration_ms=int(wall_time * 1000),
            cells=len(rows),
        )

    return PowerTable(
        config=config,
        rows=tuple(rows),
        columns=tuple(spec.label for spec in specs),
        cells=counts / config.replications,
        metadata=study_metadata(config, specs),
        wall_time_s=wall_time,
    )


def study_metadata(config: PowerStudyConfig, specs: tuple[StatisticSpec, ...]) -> dict[str, object]:
    """Provenance written with a power table; free of run-dependent values."""
    return {
        "rng_algorithm": RNG_ALGORITHM,
        "master_seed": config.master_seed,
        "critical_values": "monte_carlo",
        "quantile_rule": "weibull",
        "columns": {spec.label: spec.spec for spec in specs},
    }
