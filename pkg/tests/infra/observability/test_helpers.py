"""Tests for simulation logging helpers."""

import logging
from unittest.mock import MagicMock

from intervallum.infra.observability.helpers import (
    log_cache_event,
    log_check_result,
    log_simulation_finish,
    log_simulation_start,
    log_test_decision,
)


class TestLogSimulationStart:
    """Simulation start payloads."""

    def test_basic_payload(self) -> None:
        logger = MagicMock(spec=logging.Logger)

        log_simulation_start(logger, "montecarlo.null", 1000, 42)

        logger.info.assert_called_once_with(
            "simulation.start",
            extra={
                "data": {
                    "name": "simulation.start",
                    "operation": "montecarlo.null",
                    "replications": 1000,
                    "seed": 42,
                }
            },
        )

    def test_extra_fields_are_merged(self) -> None:
        logger = MagicMock(spec=logging.Logger)

        log_simulation_start(logger, "montecarlo.null", 10, 1, n_obs=19, workers=2)

        data = logger.info.call_args.kwargs["extra"]["data"]
        assert data["n_obs"] == 19
        assert data["workers"] == 2


class TestLogSimulationFinish:
    """Simulation finish payloads."""

    def test_duration_is_optional(self) -> None:
        logger = MagicMock(spec=logging.Logger)

        log_simulation_finish(logger, "montecarlo.power_study", 100)

        data = logger.info.call_args.kwargs["extra"]["data"]
        assert "duration_ms" not in data
        assert data["replications"] == 100

    def test_duration_and_fields(self) -> None:
        logger = MagicMock(spec=logging.Logger)

        log_simulation_finish(logger, "montecarlo.power_study", 100, duration_ms=250, cells=6)

        logger.info.assert_called_once_with(
            "simulation.finish",
            extra={
                "data": {
                    "name": "simulation.finish",
                    "operation": "montecarlo.power_study",
                    "replications": 100,
                    "duration_ms": 250,
                    "cells": 6,
                }
            },
        )


class TestLogCacheEvent:
    """Cache events go to DEBUG."""

    def test_cache_hit(self) -> None:
        logger = MagicMock(spec=logging.Logger)

        log_cache_event(logger, "hit", "greenwood|m=1|disjoint|single|n=10")

        logger.debug.assert_called_once_with(
            "cache.hit",
            extra={"data": {"name": "cache.hit", "key": "greenwood|m=1|disjoint|single|n=10"}},
        )


class TestLogTestDecision:
    """Decision records and their levels."""

    def test_regular_decision_logs_info(self) -> None:
        logger = MagicMock(spec=logging.Logger)

        log_test_decision(logger, "G*", 1.31, 0.004, "reject")

        level, message = logger.log.call_args.args
        assert level == logging.INFO
        assert message == "test.decision"
        data = logger.log.call_args.kwargs["extra"]["data"]
        assert data["statistic"] == "G*"
        assert data["degenerate"] is False

    def test_degenerate_decision_logs_warning(self) -> None:
        logger = MagicMock(spec=logging.Logger)

        log_test_decision(logger, "L", float("inf"), 0.0, "reject", degenerate=True)

        assert logger.log.call_args.args[0] == logging.WARNING


class TestLogCheckResult:
    """Property check records."""

    def test_passed_check_logs_info(self) -> None:
        logger = MagicMock(spec=logging.Logger)

        log_check_result(logger, "spacings_equality", True, p_value=0.4)

        assert logger.log.call_args.args[0] == logging.INFO
        assert logger.log.call_args.kwargs["extra"]["data"] == {
            "name": "check.result",
            "check": "spacings_equality",
            "passed": True,
            "p_value": 0.4,
        }

    def test_failed_check_logs_error(self) -> None:
        logger = MagicMock(spec=logging.Logger)

        log_check_result(logger, "hellinger_fold", False)

        assert logger.log.call_args.args[0] == logging.ERROR
