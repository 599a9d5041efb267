import json
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from intervallum.errors import ConfigError, DomainError
from intervallum.sampling.models import AlternativeFamily
from intervallum.sampling.rng import RNG_ALGORITHM
from intervallum.statistics.models import StatisticSpec, StatisticValue
from intervallum.statistics.registry import parse_statistic


class Decision(str, Enum):
    REJECT = "reject"
    FAIL_TO_REJECT = "fail_to_reject"


class MethodKind(str, Enum):
    MONTE_CARLO = "mc"
    ASYMPTOTIC_NORMAL = "asymptotic"


@dataclass(frozen=True)
class TestMethod:
    """How p-values and critical values are obtained.

    Attributes:
        kind: Monte Carlo null simulation or the asymptotic normal limit
        replications: Null replications (Monte Carlo only)
        seed: Master seed of the null streams (Monte Carlo only)
    """

    __test__ = False

    kind: MethodKind
    replications: int | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        """Validate method parameters."""
        if self.kind is MethodKind.MONTE_CARLO:
            if self.replications is None or self.replications < 1:
                raise DomainError("Monte Carlo tests need at least one null replication")
            if self.seed is None:
                raise DomainError("Monte Carlo tests need a seed")
        elif self.replications is not None or self.seed is not None:
            raise DomainError("the asymptotic method takes no replications or seed")

    @classmethod
    def monte_carlo(cls, replications: int, seed: int) -> "TestMethod":
        return cls(MethodKind.MONTE_CARLO, replications, seed)

    @classmethod
    def asymptotic_normal(cls) -> "TestMethod":
        return cls(MethodKind.ASYMPTOTIC_NORMAL)


@dataclass(frozen=True)
class TestReport:
    """Outcome of one upper-tail goodness-of-fit test.

    Attributes:
        statistic: Evaluated statistic
        p_value: p-value under the method
        critical_value: Upper alpha critical value under the same method and n
        alpha: Significance level
        decision: Reject or fail to reject
        method: Method with its provenance
        degenerate: Whether the statistic was infinite
    """

    __test__ = False

    statistic: StatisticValue
    p_value: float
    critical_value: float
    alpha: float
    decision: Decision
    method: TestMethod
    degenerate: bool = False

    def __post_init__(self) -> None:
        """Validate decision consistency."""
        if not 0.0 <= self.p_value <= 1.0:
            raise DomainError("p-value must lie in [0, 1]", {"p_value": self.p_value})
        expected = (
            Decision.REJECT
            if self.degenerate or self.statistic.value > self.critical_value
            else Decision.FAIL_TO_REJECT
        )
        if self.decision is not expected:
            raise DomainError(
                "decision disagrees with statistic and critical value",
                {"value": self.statistic.value, "critical_value": self.critical_value},
            )

    @property
    def rejected(self) -> bool:
        return self.decision is Decision.REJECT

    def to_record(self) -> dict[str, Any]:
        """Flat JSON-ready record; an infinite statistic is written as 'inf'."""
        value = self.statistic.value
        return {
            "statistic": self.statistic.spec.spec,
            "label": self.statistic.spec.label,
            "n_effective": self.statistic.n_effective,
            "value": value if math.isfinite(value) else "inf",
            "p_value": self.p_value,
            "critical_value": self.critical_value,
            "alpha": self.alpha,
            "decision": self.decision.value,
            "degenerate": self.degenerate,
            "method": self.method.kind.value,
            "replications": self.method.replications,
            "seed": self.method.seed,
            "rng_algorithm": RNG_ALGORITHM if self.method.kind is MethodKind.MONTE_CARLO else None,
        }


class PowerStudyConfig(BaseModel):
    """Design of an empirical power study.

    Families and statistics are kept as canonical spec strings so the config
    serializes as it was read.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    name: str | None = Field(default=None, description="Study name")
    alternatives: tuple[str, ...] = Field(
        min_length=1,
        description="Family spec strings",
        examples=[["A:1.5", "B:1.5", "C:1.5"]],
    )
    sample_sizes: tuple[int, ...] = Field(
        min_length=1,
        description="Numbers of observations",
        examples=[[10, 20, 30, 50, 80, 100, 200, 300]],
    )
    statistics: tuple[str, ...] = Field(
        min_length=1,
        description="Statistic spec strings",
        examples=[["greenwood", "greenwood:co", "moran", "moran:co"]],
    )
    alpha: float = Field(default=0.05, gt=0.0, lt=1.0)
    replications: int = Field(default=10_000, ge=1, description="Samples per cell")
    null_replications: int = Field(default=100_000, ge=1, description="Null samples per critical value")
    master_seed: int = Field(default=20240613, ge=0, lt=2**64)

    @field_validator("alternatives")
    @classmethod
    def _canonical_families(cls, value: tuple[str, ...]) -> tuple[str, ...]:
        specs = tuple(AlternativeFamily.from_spec(spec).spec for spec in value)
        if len(set(specs)) != len(specs):
            raise ValueError("alternatives must be distinct")
        return specs

    @field_validator("sample_sizes")
    @classmethod
    def _valid_sizes(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if any(n < 2 for n in value):
            raise ValueError("sample sizes must be at least 2")
        if len(set(value)) != len(value):
            raise ValueError("sample sizes must be distinct")
        return value

    @field_validator("statistics")
    @classmethod
    def _canonical_statistics(cls, value: tuple[str, ...]) -> tuple[str, ...]:
        specs = tuple(parse_statistic(spec).spec for spec in value)
        if len(set(specs)) != len(specs):
            raise ValueError("statistics must be distinct")
        return specs

    @property
    def families(self) -> list[AlternativeFamily]:
        return [AlternativeFamily.from_spec(spec) for spec in self.alternatives]

    @property
    def statistic_specs(self) -> list[StatisticSpec]:
        return [parse_statistic(spec) for spec in self.statistics]

    @classmethod
    def from_file(cls, path: Path, **overrides: Any) -> "PowerStudyConfig":
        """Load a config from JSON, applying non-None overrides.

        Raises:
            ConfigError: If the file is unreadable or the config invalid
        """
        try:
            payload = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"cannot read study config '{path}'", {"error": str(e)}) from e
        if not isinstance(payload, dict):
            raise ConfigError(f"study config '{path}' must be a JSON object")
        payload.update({key: value for key, value in overrides.items() if value is not None})
        return cls.build(**payload)

    @classmethod
    def build(cls, **fields: Any) -> "PowerStudyConfig":
        """Validate fields into a config.

        Raises:
            ConfigError: If validation fails
        """
        try:
            return cls(**fields)
        except ValidationError as e:
            raise ConfigError(
                "invalid power study config",
                {"errors": [error["msg"] for error in e.errors()]},
            ) from e


@dataclass(frozen=True, eq=False)
class PowerTable:
    """Empirical rejection rates on the (alternative, n) x statistic grid.

    Attributes:
        config: Study design
        rows: (family spec, n) pairs in table order
        columns: Statistic column labels
        cells: Rejection rates, one row per entry of rows
        metadata: Provenance written next to the table
        wall_time_s: Elapsed seconds (never serialized)
    """

    config: PowerStudyConfig
    rows: tuple[tuple[str, int], ...]
    columns: tuple[str, ...]
    cells: NDArray[np.float64]
    metadata: dict[str, Any] = field(default_factory=dict)
    wall_time_s: float = 0.0

    def __post_init__(self) -> None:
        """Validate table shape and cell range."""
        if len(set(self.columns)) != len(self.columns):
            raise DomainError("column labels must be distinct", {"columns": list(self.columns)})
        cells = np.array(self.cells, dtype=np.float64)
        if cells.shape != (len(self.rows), len(self.columns)):
            raise DomainError(
                "cells do not match rows and columns",
                {"shape": list(cells.shape), "rows": len(self.rows), "columns": len(self.columns)},
            )
        if np.any((cells < 0.0) | (cells > 1.0)):
            raise DomainError("rejection rates must lie in [0, 1]")
        cells.flags.writeable = False
        object.__setattr__(self, "cells", cells)

    def cell(self, family: str, n: int, column: str) -> float:
        """Rejection rate of one statistic at one (family, n).

        Raises:
            KeyError: If the row or column does not exist
        """
        canonical = AlternativeFamily.from_spec(family).spec
        try:
            row = self.rows.index((canonical, n))
        except ValueError:
            raise KeyError(f"Row ({family}, {n}) not found") from None
        if column not in self.columns:
            raise KeyError(f"Column '{column}' not found. Available columns: {', '.join(self.columns)}")
        return float(self.cells[row, self.columns.index(column)])

    @property
    def standard_error_bound(self) -> float:
        """sqrt(0.25 / replications), the largest standard error of any cell."""
        return math.sqrt(0.25 / self.config.replications)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerTable):
            return NotImplemented
        return (
            self.config == other.config
            and self.rows == other.rows
            and self.columns == other.columns
            and np.array_equal(self.cells, other.cells)
        )

    __hash__ = None  # type: ignore[assignment]
