from intervallum.cli.config import RunConfig, Subcommand
from intervallum.cli.main import build_parser, main, run

__all__ = ["RunConfig", "Subcommand", "build_parser", "main", "run"]
