"""Run scopes: correlation IDs and timing around long operations."""

import logging
import time
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any

from intervallum.infra.observability.context import (
    get_run_id,
    increment_run_id,
    set_run_id,
)


@contextmanager
def run_scope(
    operation: str,
    logger: logging.Logger,
    segment: str | None = None,
    **fields: Any,
) -> Iterator[str]:
    """Wrap an operation with a child run ID and start/finish/error logs.

    The scope:
    - Appends a segment to the current run ID (random if not given)
    - Logs '<operation>.start' with the extra fields
    - Logs '<operation>.finish' with duration_ms on success
    - Logs '<operation>.error' with error and error_type before re-raising
    - Restores the enclosing run ID on exit

    Run ID flow:
    - CLI command: 'POWER'
    - Power study: 'POWER.STUDY'
    - Null simulation chunk: 'POWER.STUDY.N20.C0004'
    - Power cell chunk: 'POWER.STUDY.R003C0001'

    Args:
        operation: Logical operation name (e.g., 'montecarlo.power_study')
        logger: Logger to emit scope events on
        segment: Custom run segment
        **fields: Extra fields included in every event

    Yields:
        The run ID active inside the scope
    """
    parent = get_run_id()
    run_id = increment_run_id(parent, segment)
    set_run_id(run_id)

    start_time = time.perf_counter()
    logger.info(
        f"{operation}.start",
        extra={"data": {"name": f"{operation}.start", **fields}},
    )

    try:
        yield run_id
    except Exception as e:
        logger.error(
            f"{operation}.error",
            extra={
                "data": {
                    "name": f"{operation}.error",
                    "error": str(e),
                    "error_type": type(e).__name__,
                    **fields,
                }
            },
        )
        raise
    else:
        duration_ms = int((time.perf_counter() - start_time) * 1000)
        logger.info(
            f"{operation}.finish",
            extra={
                "data": {
                    "name": f"{operation}.finish",
                    "duration_ms": duration_ms,
                    **fields,
                }
            },
        )
    finally:
        set_run_id(parent)
