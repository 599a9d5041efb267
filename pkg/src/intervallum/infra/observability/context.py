import secrets
import string
from contextvars import ContextVar

# Context variable for run ID propagation across nested simulation scopes
run_id_ctx: ContextVar[str | None] = ContextVar("run_id", default=None)

# Character set for generating run segments (alphanumeric for readability)
_RUN_CHARS = string.ascii_uppercase + string.digits


def get_run_id() -> str | None:
    """Get the current run ID from context.

    Returns:
        Current run ID or None outside any run scope
    """
    return run_id_ctx.get()


def set_run_id(run_id: str | None) -> None:
    """Set the run ID in context.

    Worker processes do not inherit context variables, so the engine passes
    the parent run ID explicitly and workers call this on entry.

    Args:
        run_id: Run ID to set in context
    """
    run_id_ctx.set(run_id)


def clear_run_id() -> None:
    """Clear the run ID from context."""
    run_id_ctx.set(None)


def generate_run_segment() -> str:
    """Generate a unique 5-character run segment.

    Returns:
        5-character alphanumeric string (uppercase)
    """
    return "".join(secrets.choice(_RUN_CHARS) for _ in range(5))


def append_run_segment(run_id: str | None, segment: str | None = None) -> str:
    """Append a new segment to an existing run ID.

    If run_id is None or empty, starts a new run with the segment.
    If segment is None, generates a random 5-character segment.

    Args:
        run_id: Existing run ID (e.g., 'POWER.C32PO')
        segment: Segment to append (defaults to auto-generated)

    Returns:
        New run ID with appended segment
    """
    if segment is None:
        segment = generate_run_segment()

    if not run_id:
        return segment

    return f"{run_id}.{segment}"


def increment_run_id(parent_run_id: str | None = None, segment: str | None = None) -> str:
    """Derive a child run ID for a nested scope.

    Args:
        parent_run_id: Run ID of the enclosing scope
        segment: Custom segment to append (auto-generated if None)

    Returns:
        Child run ID
    """
    return append_run_segment(parent_run_id, segment)
