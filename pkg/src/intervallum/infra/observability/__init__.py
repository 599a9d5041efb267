from intervallum.infra.observability.context import (
    append_run_segment,
    clear_run_id,
    generate_run_segment,
    get_run_id,
    increment_run_id,
    run_id_ctx,
    set_run_id,
)
from intervallum.infra.observability.helpers import (
    log_cache_event,
    log_check_result,
    log_simulation_finish,
    log_simulation_start,
    log_test_decision,
)
from intervallum.infra.observability.logging import (
    ContextFilter,
    StructuredFormatter,
    get_logger,
    setup_logging,
)
from intervallum.infra.observability.scope import run_scope

__all__ = [
    # Context
    "get_run_id",
    "set_run_id",
    "clear_run_id",
    "run_id_ctx",
    "generate_run_segment",
    "append_run_segment",
    "increment_run_id",
    # Logging
    "setup_logging",
    "get_logger",
    "ContextFilter",
    "StructuredFormatter",
    # Scopes
    "run_scope",
    # Helpers
    "log_simulation_start",
    "log_simulation_finish",
    "log_cache_event",
    "log_test_decision",
    "log_check_result",
]
