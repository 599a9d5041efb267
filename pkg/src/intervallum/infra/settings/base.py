from pathlib import Path
from typing import Literal

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class ToolkitSettings(BaseSettings):
    """Settings shared by every intervallum entry point.

    Provides:
    - Tool identification (name, version, environment)
    - Observability settings
    - Monte Carlo defaults (seed, level, replication counts, parallelism)
    - Quadrature tolerance and critical-value cache location

    Values load from ``INTERVALLUM_*`` environment variables or a ``.env`` file.
    Command-line flags take precedence over both.
    """

    model_config = SettingsConfigDict(
        env_prefix="INTERVALLUM_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Tool identification
    tool_name: str = Field(
        default="intervallum",
        description="Name reported in structured logs",
    )

    tool_version: str = Field(
        default="dev",
        description="Tool version (commit hash or tag)",
        examples=["a1b2c3d", "v0.1.0", "dev"],
    )

    environment: Literal["development", "ci", "production"] = Field(
        default="development",
        description="Where the tool is running",
    )

    # Observability
    log_level: str = Field(
        default="INFO",
        description="Logging level",
        examples=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
    )

    enable_json_logging: bool = Field(
        default=True,
        description="Enable JSON formatted logging for structured logs",
    )

    # Monte Carlo
    seed: int = Field(
        default=20240613,
        description="Master seed for every random stream",
        ge=0,
        lt=2**64,
    )

    alpha: float = Field(
        default=0.05,
        description="Significance level",
        gt=0.0,
        lt=1.0,
    )

    replications: int = Field(
        default=10_000,
        description="Replications per power-table cell",
        ge=1,
    )

    null_replications: int = Field(
        default=100_000,
        description="Null replications behind each critical value",
        ge=1,
    )

    workers: int = Field(
        default=1,
        description="Worker processes for Monte Carlo work units",
        ge=1,
    )

    chunk_size: int = Field(
        default=2_000,
        description="Replications per work unit",
        ge=1,
    )

    # Numerics
    quad_tol: float = Field(
        default=1e-10,
        description="Absolute tolerance for adaptive quadrature",
        gt=0.0,
    )

    cv_cache_path: Path | None = Field(
        default=None,
        description="JSON file caching simulated critical values",
    )
