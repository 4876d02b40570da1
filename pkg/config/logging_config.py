"""
Structured Logging Configuration

- JSON format (machine-readable) or human-readable text
- Records always go to stderr so stdout stays byte-identical across runs
- Seed tracking for randomized verification runs
- Contextual fields through log_with_context

Usage:
    from config.logging_config import get_logger

    logger = get_logger(__name__)
    logger.info("Corpus generated", extra={"extra_data": {"size": 500}})
"""

import json
import logging
import sys
from datetime import datetime, timezone
from typing import Any, Callable, Optional

SERVICE_NAME = "nullfil"


class JSONFormatter(logging.Formatter):
    """
    JSON formatter for structured logging.

    Produces one object per record:
    {
        "timestamp": "2026-01-21T12:00:00.000000Z",
        "level": "INFO",
        "service": "nullfil",
        "logger": "application.verification_service",
        "message": "Running suite",
        "seed": 20240611,
        "error_type": "SearchSpaceExceededError",  # if exception
        "extra": {...}
    }
    """

    def format(self, record: logging.LogRecord) -> str:
        log_data = {
            "timestamp": datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%S.%fZ"),
            "level": record.levelname,
            "service": SERVICE_NAME,
            "logger": record.name,
            "message": record.getMessage(),
        }

        if hasattr(record, "seed"):
            log_data["seed"] = record.seed

        if record.exc_info:
            log_data["error_type"] = record.exc_info[0].__name__
            log_data["error_message"] = str(record.exc_info[1])

        if hasattr(record, "extra_data"):
            log_data["extra"] = record.extra_data

        return json.dumps(log_data, default=str)


class DevelopmentFormatter(logging.Formatter):
    """
    Human-readable formatter.

    Example output:
    2026-01-21 12:00:00 [INFO] application.verification_service: Running suite (seed=7)
    """

    def format(self, record: logging.LogRecord) -> str:
        base = (
            f"{self.formatTime(record)} [{record.levelname}] {record.name}: {record.getMessage()}"
        )

        if hasattr(record, "seed"):
            base += f" (seed={record.seed})"

        if hasattr(record, "extra_data") and record.extra_data:
            fields = " ".join(f"{k}={v}" for k, v in record.extra_data.items())
            base += f" [{fields}]"

        if record.exc_info:
            base += f"\n{self.formatException(record.exc_info)}"

        return base


def configure_logging(level: str = "WARNING", fmt: str = "text") -> None:
    """
    Configure the root logger.

    Args:
        level: DEBUG, INFO, WARNING or ERROR
        fmt: "json" for structured records, "text" for human-readable ones
    """
    log_level = getattr(logging, level.upper(), logging.WARNING)

    root_logger = logging.getLogger()
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(log_level)

    if fmt == "json":
        formatter: logging.Formatter = JSONFormatter()
    else:
        formatter = DevelopmentFormatter(
            fmt="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S",
        )

    console_handler.setFormatter(formatter)
    root_logger.setLevel(log_level)
    root_logger.addHandler(console_handler)

    # sympy and numpy stay quiet unless something is wrong
    logging.getLogger("sympy").setLevel(logging.WARNING)


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger instance.

    Args:
        name: Logger name (typically __name__)

    Returns:
        Configured logger instance
    """
    return logging.getLogger(name)


class RunContextLogger:
    """
    Context manager stamping the active verification seed on every record.

    Usage:
        with RunContextLogger(seed=7):
            logger.info("Generating corpus")  # includes seed=7
    """

    def __init__(self, seed: int):
        self.seed = seed
        self.old_factory: Optional[Callable[..., logging.LogRecord]] = None

    def __enter__(self) -> "RunContextLogger":
        self.old_factory = logging.getLogRecordFactory()
        old_factory = self.old_factory
        seed = self.seed

        def record_factory(*args: Any, **kwargs: Any) -> logging.LogRecord:
            record = old_factory(*args, **kwargs)
            record.seed = seed
            return record

        logging.setLogRecordFactory(record_factory)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        if self.old_factory:
            logging.setLogRecordFactory(self.old_factory)


class _ContextAdapter(logging.LoggerAdapter):
    def process(self, msg, kwargs):
        kwargs["extra"] = {"extra_data": self.extra}
        return msg, kwargs


def log_with_context(logger: logging.Logger, level: str, message: str, **context: Any) -> None:
    """
    Log with additional structured fields.

    Usage:
        log_with_context(logger, "warning", "Suite failed", suite="trichotomy", failures=2)
    """
    adapter = _ContextAdapter(logger, context)
    getattr(adapter, level.lower())(message)
