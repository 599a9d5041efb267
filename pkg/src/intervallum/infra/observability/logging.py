"""Structured logging configuration and utilities.

JSON logging with automatic tool and run context injection. Logs go to
stderr: stdout belongs to command results.
"""

import logging
import math
import sys
from typing import Any

import numpy as np
from pythonjsonlogger.json import JsonFormatter

from intervallum.infra.observability.context import get_run_id
from intervallum.infra.settings.protocols import SettingsProtocol


class ContextFilter(logging.Filter):
    """Logging filter that adds tool context to all log records.

    Automatically adds:
    - tool_name: Name of the tool
    - environment: Where it runs
    - version: Tool version
    - run_id: Current run ID from context (if available)
    """

    def __init__(self, settings: SettingsProtocol):
        """Initialize the context filter with settings.

        Args:
            settings: Settings object containing tool information
        """
        super().__init__()
        self.settings = settings

    def filter(self, record: logging.LogRecord) -> bool:
        """Add context fields to the log record.

        Args:
            record: Log record to enhance

        Returns:
            True to allow the record to be logged
        """
        record.tool_name = self.settings.tool_name
        record.environment = self.settings.environment
        record.version = self.settings.tool_version
        record.run_id = get_run_id()
        return True


# Record attribute set by ContextFilter -> output key
_CONTEXT_FIELDS = (
    ("tool_name", "tool"),
    ("version", "version"),
    ("environment", "environment"),
)


def _plain(value: Any) -> Any:
    """Make a data payload JSON-safe.

    numpy scalars become Python scalars and non-finite floats become the
    strings 'inf', '-inf' and 'nan' (degenerate statistics are infinite).
    """
    if isinstance(value, np.generic):
        value = value.item()
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {key: _plain(item) for key, item in value.items()}
    if isinstance(value, list | tuple):
        return [_plain(item) for item in value]
    return value


class StructuredFormatter(JsonFormatter):
    """JSON formatter for structured logging.

    Output structure:
    - level: Log level (INFO, ERROR, etc.)
    - logger: Name of the logger
    - tool, version, environment: Set by ContextFilter
    - run_id: Run ID for correlating a simulation
    - data: Event payload, made JSON-safe
    """

    def add_fields(
        self,
        log_record: dict[str, Any],
        record: logging.LogRecord,
        message_dict: dict[str, Any],
    ) -> None:
        super().add_fields(log_record, record, message_dict)

        # Ensure consistent field naming
        if "levelname" in log_record:
            log_record["level"] = log_record.pop("levelname")
        if "name" in log_record:
            log_record["logger"] = log_record.pop("name")

        # Add tool context fields
        for attribute, key in _CONTEXT_FIELDS:
            if hasattr(record, attribute):
                log_record[key] = getattr(record, attribute)

        data = getattr(record, "data", None)
        if data:
            log_record["data"] = _plain(data)


def setup_logging(settings: SettingsProtocol) -> logging.Logger:
    """Configure structured logging for the tool.

    Sets up:
    - JSON or plain text formatting based on settings
    - Log level from settings
    - Context filter for tool and run information
    - Handler for stderr

    Args:
        settings: Settings object with logging configuration

    Returns:
        Configured root logger
    """
    # Get root logger
    logger = logging.getLogger()

    # Clear existing handlers
    logger.handlers.clear()

    # Set log level
    log_level = getattr(logging, settings.log_level.upper(), logging.INFO)
    logger.setLevel(log_level)

    # Create handler; stdout is reserved for command output
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(log_level)

    # Configure formatter
    if settings.enable_json_logging:
        formatter = StructuredFormatter(
            "%(asctime)s %(levelname)s %(name)s %(run_id)s %(message)s"
        )
    else:
        formatter = logging.Formatter(
            "%(asctime)s - %(levelname)s - %(name)s - %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )

    handler.setFormatter(formatter)

    # Add context filter for structured logging
    if settings.enable_json_logging:
        handler.addFilter(ContextFilter(settings))

    # Add handler to logger
    logger.addHandler(handler)

    return logger


def get_logger(name: str | None = None) -> logging.Logger:
    """Get a logger instance.

    Args:
        name: Logger name (defaults to the root logger)

    Returns:
        Logger instance
    """
    return logging.getLogger(name)
