"""Command-line entry point.

Exit codes:
    0  success; for 'test', no statistic rejected
    1  malformed input file
    2  invalid configuration or spec string
    3  'test': at least one rejection; 'checks': a check failed
"""

import argparse
import logging
import sys
from collections.abc import Callable, Sequence

from intervallum import __version__
from intervallum.cli.commands import (
    EXIT_CONFIG,
    EXIT_INPUT,
    cmd_checks,
    cmd_critical_values,
    cmd_efficacy,
    cmd_hellinger,
    cmd_power,
    cmd_test,
)
from intervallum.cli.config import (
    BUNDLED_CONFIG_ALIAS,
    SUBCOMMAND_ALIASES,
    RunConfig,
    Subcommand,
    build_run_config,
)
from intervallum.errors import ConfigError, InputError, IntervallumError
from intervallum.infra.observability import run_scope, setup_logging
from intervallum.infra.settings import ToolkitSettings

logger = logging.getLogger(__name__)

GRAMMAR = f"""\
family specs (--family, --null), case-insensitive:
  uniform            U(0,1)
  A:<k>              F(x) = 1 - (1 - x)^k
  B:<k>              symmetric, F(x) = 2^(k-1) x^k on [0, 1/2]
  C:<k>              symmetric, F(x) = 1/2 - 2^(k-1) (1/2 - x)^k on [0, 1/2]
  beta:<k>           Beta(k, k)

statistic specs (--stat), ':'-separated, case-insensitive:
  <h>                usual simple spacings
  <h>:co             centre-outward simple spacings
  <h>:max            max of the usual and centre-outward statistics
  <h>[:co]:m=<int>[:disjoint|:overlap]
                     m-step spacings (disjoint by default)
  <h> is greenwood, moran, rao, entropy, or a registered score function.

--config takes a study JSON file, or '{BUNDLED_CONFIG_ALIAS}' for the bundled design
covering A, B, C at k = 1.5 and Beta(k, k) at k = 0.5, 1.5, 2.5.

exit codes: 0 ok, 1 malformed input, 2 invalid configuration,
3 rejection ('test') or failed check ('checks').
"""

COMMANDS: dict[Subcommand, Callable[[RunConfig], int]] = {
    Subcommand.TEST: cmd_test,
    Subcommand.CRITICAL_VALUES: cmd_critical_values,
    Subcommand.POWER: cmd_power,
    Subcommand.EFFICACY: cmd_efficacy,
    Subcommand.HELLINGER: cmd_hellinger,
    Subcommand.CHECKS: cmd_checks,
}


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, help="master seed (unsigned 64-bit)")
    common.add_argument("--alpha", type=float, help="significance level")
    common.add_argument("--reps", type=int, help="replications")
    common.add_argument(
        "--format",
        choices=["csv", "json"],
        help="output format (default: csv for a .csv --out path, else json)",
    )
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--cv-cache", help="critical-value cache file")
    common.add_argument("--workers", type=int, help="worker processes")
    common.add_argument("--chunk-size", type=int, help="replications per work unit")
    common.add_argument("--log-level", help="DEBUG, INFO, WARNING, ERROR")
    logs = common.add_mutually_exclusive_group()
    logs.add_argument("--json-logs", dest="json_logs", action="store_true", default=None)
    logs.add_argument("--plain-logs", dest="json_logs", action="store_false")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="intervallum",
        description="Goodness-of-fit tests based on usual and centre-outward sample spacings.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(command: Subcommand, help_text: str) -> argparse.ArgumentParser:
        aliases = [alias for alias, name in SUBCOMMAND_ALIASES.items() if name == command.value]
        return sub.add_parser(
            command.value,
            aliases=aliases,
            parents=[common],
            help=help_text,
            description=help_text,
            epilog=GRAMMAR,
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )

    test = add(Subcommand.TEST, "test a data file (one value per line, '#' comments) for uniformity")
    test.add_argument("input", help="data file")
    test.add_argument("--stat", action="append", help="statistic spec (repeatable)")
    test.add_argument("--null", help="family spec whose cdf maps the data to [0, 1]")
    test.add_argument("--method", choices=["mc", "asymptotic"], default="mc")

    critical = add(Subcommand.CRITICAL_VALUES, "simulate null critical values")
    critical.add_argument("--stat", action="append", help="statistic spec (repeatable)")
    critical.add_argument("--n", type=int, action="append", help="number of observations (repeatable)")

    power = add(Subcommand.POWER, "empirical power table")
    power.add_argument("--config", help=f"study JSON file or '{BUNDLED_CONFIG_ALIAS}'")
    power.add_argument("--family", action="append", help="family spec (repeatable)")
    power.add_argument("--stat", action="append", help="statistic spec (repeatable)")
    power.add_argument("--n", type=int, action="append", help="number of observations (repeatable)")
    power.add_argument("--null-reps", type=int, help="null replications per critical value")

    efficacy = add(Subcommand.EFFICACY, "efficacies of score functions along local alternatives")
    efficacy.add_argument("--stat", action="append", help="score function name (repeatable)")
    efficacy.add_argument(
        "--perturbation", action="append", help="linear, cosine or cubic (repeatable)"
    )
    efficacy.add_argument("--co", action="store_true", help="centre-outward efficacy")

    hellinger = add(Subcommand.HELLINGER, "Hellinger distances of families and their CO folds")
    hellinger.add_argument("--family", action="append", help="family spec (repeatable)")

    checks = add(Subcommand.CHECKS, "equality of usual and CO null laws; Hellinger fold bound")
    checks.add_argument("--stat", action="append", help="score function name (repeatable)")
    checks.add_argument("--n", type=int, action="append", help="number of observations (repeatable)")
    checks.add_argument("--family", action="append", help="family spec for the fold bound")

    return parser


def main(argv: Sequence[str] | None = None, settings: ToolkitSettings | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = build_run_config(args, settings)
    except (ConfigError, ValueError) as e:
        sys.stderr.write(f"intervallum: {e}\n")
        return EXIT_CONFIG

    setup_logging(config.settings)
    try:
        with run_scope(f"cli.{config.subcommand.value}", logger, segment=config.subcommand.name):
            return COMMANDS[config.subcommand](config)
    except InputError as e:
        sys.stderr.write(f"intervallum: {e.message}\n")
        return EXIT_INPUT
    except (IntervallumError, KeyError) as e:
        message = e.message if isinstance(e, IntervallumError) else e.args[0]
        sys.stderr.write(f"intervallum: {message}\n")
        return EXIT_CONFIG


def run() -> None:
    sys.exit(main())
