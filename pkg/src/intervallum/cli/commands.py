"""Subcommand implementations. Each returns the process exit code."""

import logging
from typing import Any

from intervallum.asymptotics.efficacy import efficacy_with_error
from intervallum.asymptotics.hellinger import fold_check, fold_grid
from intervallum.asymptotics.local import co_perturbation, get_perturbation
from intervallum.asymptotics.models import HellingerResult
from intervallum.cli.config import RunConfig
from intervallum.cli.inputs import read_sample
from intervallum.cli.output import emit, format_document, format_records
from intervallum.errors import ConfigError, DegenerateVarianceError
from intervallum.montecarlo.cache import CriticalValueCache
from intervallum.montecarlo.checks import equality_check
from intervallum.montecarlo.models import MethodKind, PowerStudyConfig, TestMethod
from intervallum.montecarlo.null import null_critical_values, simulate_null
from intervallum.montecarlo.power import power_study
from intervallum.montecarlo.runner import run_test
from intervallum.montecarlo.serialization import (
    power_table_csv,
    power_table_document,
    write_power_table,
)
from intervallum.sampling.models import AlternativeFamily
from intervallum.sampling.rng import RNG_ALGORITHM, RngStream
from intervallum.statistics.models import BUILTIN_H_FUNCTIONS, HFunction
from intervallum.statistics.registry import get_default_registry, parse_statistic

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CONFIG = 2
EXIT_REJECT = 3

DEFAULT_STATISTICS = ("greenwood",)
DEFAULT_PERTURBATIONS = ("linear", "cosine", "cubic")
DEFAULT_EQUALITY_N = 19


def _score_functions(config: RunConfig) -> list[HFunction]:
    if not config.statistics:
        return list(BUILTIN_H_FUNCTIONS)
    registry = get_default_registry()
    return [registry.get(spec.split(":", 1)[0].strip()) for spec in config.statistics]


def cmd_test(config: RunConfig) -> int:
    """Test a data file against U(0,1) with every requested statistic."""
    if config.input_path is None:
        raise ConfigError("test needs an input file")
    sample = read_sample(config.input_path, config.null_family)
    specs = [parse_statistic(spec) for spec in config.statistics or DEFAULT_STATISTICS]
    settings = config.settings

    if config.method is MethodKind.ASYMPTOTIC_NORMAL:
        method = TestMethod.asymptotic_normal()
        nulls: dict[str, Any] = {}
    else:
        method = TestMethod.monte_carlo(config.replications, config.seed)
        nulls = simulate_null(
            specs,
            sample.size,
            config.replications,
            RngStream(config.seed),
            settings.workers,
            settings.chunk_size,
        )

    reports = [
        run_test(
            sample,
            spec,
            config.alpha,
            method,
            null=nulls.get(spec.null_key),
            quad_tol=settings.quad_tol,
        )
        for spec in specs
    ]
    records = [report.to_record() for report in reports]
    emit(format_records(records, config.format), config.output_path)
    return EXIT_REJECT if any(report.rejected for report in reports) else EXIT_OK


def cmd_critical_values(config: RunConfig) -> int:
    """Simulated upper-alpha critical values for every (statistic, n)."""
    if not config.sample_sizes:
        raise ConfigError("critical-values needs at least one --n")
    specs = [parse_statistic(spec) for spec in config.statistics or DEFAULT_STATISTICS]
    settings = config.settings
    # --reps sets the null replication count here
    replications = int(config.explicit.get("replications", config.null_replications))
    cache = CriticalValueCache(config.cv_cache_path) if config.cv_cache_path else None
    rng = RngStream(config.seed)

    records = []
    for n_obs in config.sample_sizes:
        values = null_critical_values(
            specs,
            n_obs,
            config.alpha,
            replications,
            rng,
            cache=cache,
            workers=settings.workers,
            chunk_size=settings.chunk_size,
        )
        records.extend(
            {
                "statistic": spec.spec,
                "label": spec.label,
                "n": n_obs,
                "alpha": config.alpha,
                "replications": replications,
                "seed": config.seed,
                "rng_algorithm": RNG_ALGORITHM,
                "critical_value": values[spec.null_key],
            }
            for spec in specs
        )
    if cache is not None:
        cache.save()

    emit(format_records(records, config.format), config.output_path)
    return EXIT_OK


def _study_config(config: RunConfig) -> PowerStudyConfig:
    if config.config_path is not None:
        return PowerStudyConfig.from_file(config.config_path, **config.explicit)
    if not (config.families and config.statistics and config.sample_sizes):
        raise ConfigError("power needs --config, or --family, --stat and --n")
    return PowerStudyConfig.build(
        alternatives=config.families,
        statistics=config.statistics,
        sample_sizes=config.sample_sizes,
        alpha=config.alpha,
        replications=config.replications,
        null_replications=config.null_replications,
        master_seed=config.seed,
    )


def cmd_power(config: RunConfig) -> int:
    """Empirical power table; CSV output to a file also writes the JSON sidecar."""
    study = _study_config(config)
    settings = config.settings
    cache = CriticalValueCache(config.cv_cache_path) if config.cv_cache_path else None

    table = power_study(study, workers=settings.workers, chunk_size=settings.chunk_size, cache=cache)
    if cache is not None:
        cache.save()

    if config.output_path is not None:
        write_power_table(table, config.output_path, config.format)
    elif config.format == "json":
        emit(format_document(power_table_document(table)), None)
    else:
        emit(power_table_csv(table), None)
    return EXIT_OK


def cmd_efficacy(config: RunConfig) -> int:
    """Efficacies of score functions along named perturbations."""
    functions = _score_functions(config)
    quad_tol = config.settings.quad_tol
    records = []
    for name in config.perturbations or DEFAULT_PERTURBATIONS:
        alternative = get_perturbation(name)
        direction = co_perturbation(alternative) if config.co else alternative.l
        for h in functions:
            try:
                value, error = efficacy_with_error(h, direction, quad_tol)
            except DegenerateVarianceError as e:
                logger.warning(
                    "efficacy.degenerate",
                    extra={"data": {"name": "efficacy.degenerate", "h": h.name, "error": e.message}},
                )
                value, error = None, None
            records.append(
                {
                    "h": h.name,
                    "family_or_l": f"{alternative.name}{'*' if config.co else ''}",
                    "value": value,
                    "quadrature_error": error,
                }
            )
    emit(format_records(records, config.format), config.output_path)
    return EXIT_OK


def cmd_hellinger(config: RunConfig) -> int:
    """Hellinger distances of families and of their centre-outward folds from U(0,1)."""
    quad_tol = config.settings.quad_tol
    if config.families:
        results = [fold_check(AlternativeFamily.from_spec(spec), quad_tol) for spec in config.families]
    else:
        results = fold_grid(quad_tol=quad_tol)
    records = [_hellinger_record(result) for result in results]
    emit(format_records(records, config.format), config.output_path)
    return EXIT_OK


def _hellinger_record(result: HellingerResult) -> dict[str, Any]:
    return {
        "family_or_l": result.family,
        "value": result.hd_direct,
        "value_co": result.hd_co,
        "gap": result.gap,
        "quadrature_error": result.quadrature_error_bound,
        "holds": result.holds,
    }


def cmd_checks(config: RunConfig) -> int:
    """Distributional equality of usual and CO statistics, and the Hellinger fold bound."""
    rng = RngStream(config.seed)
    settings = config.settings
    sizes = config.sample_sizes or (DEFAULT_EQUALITY_N,)

    equality = [
        equality_check(n_obs, config.replications, rng, h, chunk_size=settings.chunk_size).to_dict()
        for n_obs in sizes
        for h in _score_functions(config)
    ]
    if config.families:
        fold = [
            fold_check(AlternativeFamily.from_spec(spec), settings.quad_tol)
            for spec in config.families
        ]
    else:
        fold = fold_grid(quad_tol=settings.quad_tol)
    hellinger = [_hellinger_record(result) for result in fold]

    passed = all(check["passed"] for check in equality) and all(r["holds"] for r in hellinger)
    if config.format == "json":
        document = {"equality": equality, "hellinger": hellinger, "passed": passed}
        emit(format_document(document), config.output_path)
    else:
        records = [
            {
                "check": "equality",
                "subject": f"{check['statistic']}|n={check['n_obs']}",
                "value": check["p_value"],
                "passed": check["passed"],
            }
            for check in equality
        ] + [
            {
                "check": "hellinger",
                "subject": record["family_or_l"],
                "value": record["gap"],
                "passed": record["holds"],
            }
            for record in hellinger
        ]
        emit(format_records(records, "csv"), config.output_path)
    return EXIT_OK if passed else EXIT_REJECT
