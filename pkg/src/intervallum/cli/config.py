import argparse
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path

from intervallum.errors import ConfigError
from intervallum.infra.settings import ToolkitSettings
from intervallum.montecarlo.models import MethodKind
from intervallum.sampling.models import AlternativeFamily
from intervallum.statistics.registry import parse_statistic

# Name under which the bundled table design can be passed to --config
BUNDLED_CONFIG_ALIAS = "tables"
BUNDLED_CONFIG_FILE = "co-spacings-tables.json"

# Alternative subcommand names accepted on the command line
SUBCOMMAND_ALIASES = {"lemma-checks": "checks"}


class Subcommand(str, Enum):
    TEST = "test"
    CRITICAL_VALUES = "critical-values"
    POWER = "power"
    EFFICACY = "efficacy"
    HELLINGER = "hellinger"
    CHECKS = "checks"


@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation, after flags, environment and defaults are merged.

    Flags win over INTERVALLUM_* settings, which win over built-in defaults.
    """

    subcommand: Subcommand
    settings: ToolkitSettings
    format: str = "json"
    input_path: Path | None = None
    output_path: Path | None = None
    statistics: tuple[str, ...] = ()
    families: tuple[str, ...] = ()
    sample_sizes: tuple[int, ...] = ()
    null_family: str | None = None
    method: MethodKind = MethodKind.MONTE_CARLO
    config_path: Path | None = None
    perturbations: tuple[str, ...] = ()
    co: bool = False
    explicit: dict[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Check every spec string before any work starts.

        Raises:
            SpecParseError: If a family or statistic spec is malformed
            ConfigError: If a flag value is out of range
        """
        for spec in self.statistics:
            parse_statistic(spec)
        for spec in (*self.families, *([self.null_family] if self.null_family else [])):
            AlternativeFamily.from_spec(spec)
        if any(n < 1 for n in self.sample_sizes):
            raise ConfigError("sample sizes must be positive", {"n": list(self.sample_sizes)})
        if self.format not in ("csv", "json"):
            raise ConfigError(f"unknown format '{self.format}'. Available formats: csv, json")

    @property
    def null_replications(self) -> int:
        return self.settings.null_replications

    @property
    def seed(self) -> int:
        return self.settings.seed

    @property
    def alpha(self) -> float:
        return self.settings.alpha

    @property
    def replications(self) -> int:
        return self.settings.replications

    @property
    def cv_cache_path(self) -> Path | None:
        return self.settings.cv_cache_path


def resolve_config_path(value: str) -> Path:
    """A study config path, or the bundled design for the 'tables' alias."""
    if value == BUNDLED_CONFIG_ALIAS:
        return Path(str(resources.files("intervallum") / "data" / BUNDLED_CONFIG_FILE))
    return Path(value)


def resolve_format(fmt: str | None, out: str | None) -> str:
    """The --format flag, else csv for a '.csv' output path, else json."""
    if fmt:
        return fmt
    if out and Path(out).suffix.lower() == ".csv":
        return "csv"
    return "json"


def build_settings(args: argparse.Namespace, base: ToolkitSettings | None = None) -> ToolkitSettings:
    """Apply command-line overrides on top of environment settings.

    Raises:
        ConfigError: If an override is invalid
    """
    base = base or ToolkitSettings()
    overrides = {
        "seed": args.seed,
        "alpha": args.alpha,
        "replications": args.reps,
        "workers": args.workers,
        "chunk_size": args.chunk_size,
        "cv_cache_path": args.cv_cache,
        "log_level": args.log_level,
        "enable_json_logging": args.json_logs,
        "null_replications": getattr(args, "null_reps", None),
    }
    merged = {**base.model_dump(), **{k: v for k, v in overrides.items() if v is not None}}
    try:
        return ToolkitSettings(**merged)
    except ValueError as e:
        raise ConfigError("invalid option value", {"error": str(e)}) from e


def build_run_config(args: argparse.Namespace, base: ToolkitSettings | None = None) -> RunConfig:
    settings = build_settings(args, base)
    return RunConfig(
        subcommand=Subcommand(SUBCOMMAND_ALIASES.get(args.command, args.command)),
        settings=settings,
        format=resolve_format(args.format, args.out),
        input_path=Path(args.input) if getattr(args, "input", None) else None,
        output_path=Path(args.out) if args.out else None,
        statistics=tuple(getattr(args, "stat", None) or ()),
        families=tuple(getattr(args, "family", None) or ()),
        sample_sizes=tuple(getattr(args, "n", None) or ()),
        null_family=getattr(args, "null", None),
        method=MethodKind(getattr(args, "method", MethodKind.MONTE_CARLO.value)),
        config_path=resolve_config_path(args.config) if getattr(args, "config", None) else None,
        perturbations=tuple(getattr(args, "perturbation", None) or ()),
        co=bool(getattr(args, "co", False)),
        explicit=explicit_overrides(args),
    )


def explicit_overrides(args: argparse.Namespace) -> dict[str, object]:
    """Study parameters given on the command line, named as in PowerStudyConfig.

    Only these override a study config file.
    """
    given = {
        "master_seed": args.seed,
        "alpha": args.alpha,
        "replications": args.reps,
        "null_replications": getattr(args, "null_reps", None),
    }
    return {key: value for key, value in given.items() if value is not None}
