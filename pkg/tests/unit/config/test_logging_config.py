"""
Unit Tests for Structured Logging
"""

import json
import logging

import pytest

from config.logging_config import (
    DevelopmentFormatter,
    JSONFormatter,
    RunContextLogger,
    configure_logging,
    get_logger,
    log_with_context,
)


def make_record(message="Running suite", **attributes):
    record = logging.LogRecord(
        "application.verification_service", logging.INFO, __file__, 1, message, None, None
    )
    for key, value in attributes.items():
        setattr(record, key, value)
    return record


class TestFormatters:
    """Test suite for JSONFormatter and DevelopmentFormatter"""

    def test_json_record(self):
        """Test the structured fields of one record"""
        payload = json.loads(JSONFormatter().format(make_record(seed=7)))

        assert payload["service"] == "nullfil"
        assert payload["level"] == "INFO"
        assert payload["message"] == "Running suite"
        assert payload["seed"] == 7

    def test_json_extra_data(self):
        """Test that extra_data lands under "extra" """
        record = make_record(extra_data={"suite": "trichotomy"})

        assert json.loads(JSONFormatter().format(record))["extra"] == {"suite": "trichotomy"}

    def test_text_record(self):
        """Test the seed and field suffixes of text records"""
        text = DevelopmentFormatter().format(make_record(seed=3, extra_data={"failures": 2}))

        assert "[INFO] application.verification_service: Running suite" in text
        assert "(seed=3)" in text
        assert "[failures=2]" in text


class TestLoggingSetup:
    """Test suite for configure_logging and context helpers"""

    @pytest.fixture(autouse=True)
    def restore_root(self):
        """Put the root logger back after each test"""
        root = logging.getLogger()
        handlers, level = root.handlers[:], root.level
        yield
        root.handlers[:] = handlers
        root.setLevel(level)

    def test_configure_json(self):
        """Test a single stderr handler with the JSON formatter"""
        configure_logging("debug", "json")
        root = logging.getLogger()

        assert root.level == logging.DEBUG
        assert len(root.handlers) == 1
        assert isinstance(root.handlers[0].formatter, JSONFormatter)

    def test_seed_is_stamped(self, caplog):
        """Test that RunContextLogger adds the seed to records"""
        logger = get_logger("tests.seed")
        with caplog.at_level(logging.INFO, logger="tests.seed"):
            with RunContextLogger(seed=11):
                logger.info("inside")
            logger.info("outside")

        inside, outside = caplog.records
        assert inside.seed == 11
        assert not hasattr(outside, "seed")

    def test_log_with_context(self, caplog):
        """Test that keyword fields travel as extra_data"""
        logger = get_logger("tests.context")
        with caplog.at_level(logging.WARNING, logger="tests.context"):
            log_with_context(logger, "warning", "Suite failed", suite="preimage", failures=1)

        record = caplog.records[0]
        assert record.getMessage() == "Suite failed"
        assert record.extra_data == {"suite": "preimage", "failures": 1}
