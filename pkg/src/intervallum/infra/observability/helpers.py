"""Helper utilities for structured logging of simulation events.

Every helper emits one record whose message equals the event name and whose
``data`` payload follows the same layout, so log consumers can filter on
``data.name``.
"""

import logging
from typing import Any


def log_simulation_start(
    logger: logging.Logger,
    operation: str,
    replications: int,
    seed: int,
    **kwargs: Any,
) -> None:
    """Log the start of a Monte Carlo simulation.

    Args:
        logger: Logger instance to use
        operation: Logical operation name (e.g., 'montecarlo.null')
        replications: Number of replications requested
        seed: Master seed of the random streams
        **kwargs: Additional fields to include in data
    """
    data = {
        "name": "simulation.start",
        "operation": operation,
        "replications": replications,
        "seed": seed,
        **kwargs,
    }

    logger.info("simulation.start", extra={"data": data})


def log_simulation_finish(
    logger: logging.Logger,
    operation: str,
    replications: int,
    duration_ms: int | None = None,
    **kwargs: Any,
) -> None:
    """Log the completion of a Monte Carlo simulation.

    Args:
        logger: Logger instance to use
        operation: Logical operation name
        replications: Number of replications performed
        duration_ms: Wall time in milliseconds
        **kwargs: Additional fields to include in data
    """
    data = {
        "name": "simulation.finish",
        "operation": operation,
        "replications": replications,
    }

    if duration_ms is not None:
        data["duration_ms"] = duration_ms

    data.update(kwargs)

    logger.info("simulation.finish", extra={"data": data})


def log_cache_event(
    logger: logging.Logger,
    event: str,
    key: str,
    **kwargs: Any,
) -> None:
    """Log a critical-value cache hit, miss or write.

    Args:
        logger: Logger instance to use
        event: One of 'hit', 'miss', 'write'
        key: Cache key
        **kwargs: Additional fields to include in data
    """
    data = {
        "name": f"cache.{event}",
        "key": key,
        **kwargs,
    }
    logger.debug(f"cache.{event}", extra={"data": data})


def log_test_decision(
    logger: logging.Logger,
    statistic: str,
    value: float,
    p_value: float,
    decision: str,
    degenerate: bool = False,
    **kwargs: Any,
) -> None:
    """Log the outcome of a goodness-of-fit test.

    Degenerate statistics are logged at WARNING.

    Args:
        logger: Logger instance to use
        statistic: Statistic label (e.g., 'G*')
        value: Observed statistic
        p_value: Reported p-value
        decision: 'reject' or 'fail_to_reject'
        degenerate: Whether the statistic was infinite
        **kwargs: Additional fields to include in data
    """
    data = {
        "name": "test.decision",
        "statistic": statistic,
        "value": value,
        "p_value": p_value,
        "decision": decision,
        "degenerate": degenerate,
        **kwargs,
    }
    log_level = logging.WARNING if degenerate else logging.INFO
    logger.log(log_level, "test.decision", extra={"data": data})


def log_check_result(
    logger: logging.Logger,
    check: str,
    passed: bool,
    **kwargs: Any,
) -> None:
    """Log a numerical property check (distributional equality, Hellinger bound, ...).

    Args:
        logger: Logger instance to use
        check: Check name
        passed: Whether the property held
        **kwargs: Numeric evidence
    """
    data = {
        "name": "check.result",
        "check": check,
        "passed": passed,
        **kwargs,
    }
    log_level = logging.INFO if passed else logging.ERROR
    logger.log(log_level, "check.result", extra={"data": data})
