"""Tests for structured logging configuration."""

import json
import logging
import sys

import numpy as np

from intervallum.infra.observability.context import clear_run_id, set_run_id
from intervallum.infra.observability.logging import (
    ContextFilter,
    StructuredFormatter,
    get_logger,
    setup_logging,
)


class MockSettings:
    """Mock settings for testing."""

    def __init__(
        self,
        tool_name="intervallum-test",
        environment="ci",
        tool_version="1.0.0",
        log_level="INFO",
        enable_json_logging=True,
    ):
        self.tool_name = tool_name
        self.environment = environment
        self.tool_version = tool_version
        self.log_level = log_level
        self.enable_json_logging = enable_json_logging


def make_record(name="test", msg="test message"):
    return logging.LogRecord(
        name=name,
        level=logging.INFO,
        pathname="test.py",
        lineno=1,
        msg=msg,
        args=(),
        exc_info=None,
    )


class TestContextFilter:
    """Tests for ContextFilter."""

    def teardown_method(self):
        clear_run_id()

    def test_context_filter_adds_tool_context(self):
        """Test that filter adds tool context to log records."""
        filter = ContextFilter(
            MockSettings(tool_name="intervallum", environment="production", tool_version="2.0.0")
        )
        record = make_record()

        result = filter.filter(record)

        assert result is True
        assert record.tool_name == "intervallum"
        assert record.environment == "production"
        assert record.version == "2.0.0"

    def test_context_filter_adds_run_id(self):
        """Test that filter adds run ID from context."""
        filter = ContextFilter(MockSettings())
        set_run_id("POWER.N100.C0002")
        record = make_record()

        filter.filter(record)

        assert record.run_id == "POWER.N100.C0002"

    def test_context_filter_run_id_none(self):
        """Test that filter handles a missing run ID."""
        filter = ContextFilter(MockSettings())
        record = make_record()

        filter.filter(record)

        assert record.run_id is None


class TestStructuredFormatter:
    """Tests for StructuredFormatter."""

    def test_structured_formatter_renames_levelname(self):
        """Test that formatter renames levelname to level."""
        formatter = StructuredFormatter()
        log_record = {"levelname": "INFO", "name": "test.module", "message": "test message"}

        formatter.add_fields(log_record, make_record("test.module"), {})

        assert log_record["level"] == "INFO"
        assert "levelname" not in log_record

    def test_structured_formatter_renames_name_to_logger(self):
        """Test that formatter renames name to logger."""
        formatter = StructuredFormatter()
        log_record = {"name": "intervallum.montecarlo.power", "message": "m"}

        formatter.add_fields(log_record, make_record("intervallum.montecarlo.power"), {})

        assert log_record["logger"] == "intervallum.montecarlo.power"
        assert "name" not in log_record

    def test_structured_formatter_includes_data_field(self):
        """Test that formatter includes the data payload."""
        formatter = StructuredFormatter()
        record = make_record()
        record.data = {"name": "simulation.start", "replications": 1000}

        log_record = {}
        formatter.add_fields(log_record, record, {})

        assert log_record["data"] == {"name": "simulation.start", "replications": 1000}

    def test_structured_formatter_handles_missing_data(self):
        """Test that formatter handles a missing data field."""
        formatter = StructuredFormatter()

        log_record = {}
        formatter.add_fields(log_record, make_record(), {})

        assert "data" not in log_record

    def test_structured_formatter_makes_data_json_safe(self):
        """Test that numpy scalars and infinite statistics serialize as valid JSON."""
        formatter = StructuredFormatter("%(levelname)s %(name)s %(message)s")
        record = make_record("intervallum.montecarlo.runner", "test.decision")
        record.data = {
            "value": float("inf"),
            "p_value": np.float64(0.25),
            "counts": (np.int64(3), -np.inf),
        }

        payload = json.loads(formatter.format(record))

        assert payload["data"] == {"value": "inf", "p_value": 0.25, "counts": [3, "-inf"]}

    def test_structured_formatter_copies_tool_fields(self):
        """Test that tool identity set by the filter reaches the output."""
        formatter = StructuredFormatter()
        record = make_record()
        ContextFilter(MockSettings(tool_version="0.1.0")).filter(record)

        log_record = {}
        formatter.add_fields(log_record, record, {})

        assert log_record["tool"] == "intervallum-test"
        assert log_record["version"] == "0.1.0"
        assert log_record["environment"] == "ci"

    def test_structured_formatter_emits_json(self):
        """Test a full format round through json."""
        formatter = StructuredFormatter("%(levelname)s %(name)s %(message)s")
        record = make_record("intervallum.cli", "cli.power.start")
        record.data = {"name": "cli.power.start"}

        payload = json.loads(formatter.format(record))

        assert payload["message"] == "cli.power.start"
        assert payload["level"] == "INFO"
        assert payload["data"] == {"name": "cli.power.start"}


class TestSetupLogging:
    """Tests for setup_logging function."""

    def teardown_method(self):
        """Clean up logging handlers after each test."""
        logging.getLogger().handlers.clear()

    def test_setup_logging_returns_root_logger(self):
        logger = setup_logging(MockSettings())

        assert logger == logging.getLogger()

    def test_setup_logging_clears_existing_handlers(self):
        """Test that setup removes existing handlers."""
        logger = logging.getLogger()
        logger.addHandler(logging.StreamHandler())

        setup_logging(MockSettings())

        assert len(logger.handlers) == 1

    def test_setup_logging_sets_log_level(self):
        logger = setup_logging(MockSettings(log_level="DEBUG"))

        assert logger.level == logging.DEBUG
        assert logger.handlers[0].level == logging.DEBUG

    def test_setup_logging_with_json_formatting(self):
        logger = setup_logging(MockSettings(enable_json_logging=True))

        handler = logger.handlers[0]
        assert isinstance(handler.formatter, StructuredFormatter)
        assert len(handler.filters) == 1
        assert isinstance(handler.filters[0], ContextFilter)

    def test_setup_logging_with_plain_formatting(self):
        logger = setup_logging(MockSettings(enable_json_logging=False))

        handler = logger.handlers[0]
        assert not isinstance(handler.formatter, StructuredFormatter)
        assert len(handler.filters) == 0

    def test_setup_logging_writes_to_stderr(self):
        """Test that logs stay off stdout, which carries command output."""
        logger = setup_logging(MockSettings())

        handler = logger.handlers[0]
        assert isinstance(handler, logging.StreamHandler)
        assert handler.stream == sys.stderr

    def test_setup_logging_invalid_level_defaults_to_info(self):
        logger = setup_logging(MockSettings(log_level="INVALID"))

        assert logger.level == logging.INFO


class TestGetLogger:
    """Tests for get_logger function."""

    def test_get_logger_without_name(self):
        assert get_logger().name == "root"

    def test_get_logger_with_name(self):
        assert get_logger("intervallum.sampling").name == "intervallum.sampling"
