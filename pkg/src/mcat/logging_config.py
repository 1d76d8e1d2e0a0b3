"""
Logging configuration for the verification kernel.
Records carry the name of the suite being run; console output goes to
stderr so that reports can own stdout.
"""
import logging
import logging.handlers
import sys
from contextlib import contextmanager
from contextvars import ContextVar
from pathlib import Path
from typing import Iterator, Optional

ROOT = "mcat"

CONSOLE_FORMAT = "%(levelname)-7s %(name)s [%(suite)s] %(message)s"
FILE_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - [%(suite)s] %(funcName)s:%(lineno)d - %(message)s"

_suite: ContextVar[str] = ContextVar("mcat_suite", default="-")


class SuiteFilter(logging.Filter):
    """Stamps each record with the suite running when it was logged."""

    def filter(self, record: logging.LogRecord) -> bool:
        record.suite = _suite.get()
        return True


@contextmanager
def suite_context(name: str) -> Iterator[None]:
    token = _suite.set(name)
    try:
        yield
    finally:
        _suite.reset(token)


def current_suite() -> str:
    return _suite.get()


def setup_logging(
    log_dir: str = "logs",
    log_level: str = "INFO",
    log_to_file: bool = False,
    log_to_console: bool = True,
    max_bytes: int = 10 * 1024 * 1024,  # 10MB
    backup_count: int = 5,
) -> logging.Logger:
    """
    Configure the mcat logger tree.

    Args:
        log_dir: Directory for mcat.log and mcat_errors.log
        log_level: Console level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_to_file: Also write rotating files; they always log at DEBUG
        log_to_console: Write to stderr
        max_bytes: Size at which a log file rotates
        backup_count: Rotated files kept per log

    Returns:
        The "mcat" logger
    """
    level = getattr(logging, log_level.upper())
    logger = logging.getLogger(ROOT)
    logger.setLevel(logging.DEBUG if log_to_file else level)
    logger.handlers.clear()
    logger.propagate = False
    stamp = SuiteFilter()

    # Console handler
    if log_to_console:
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(logging.Formatter(CONSOLE_FORMAT))
        console_handler.addFilter(stamp)
        logger.addHandler(console_handler)

    if log_to_file:
        log_path = Path(log_dir)
        log_path.mkdir(parents=True, exist_ok=True)
        formatter = logging.Formatter(fmt=FILE_FORMAT, datefmt="%Y-%m-%d %H:%M:%S")

        # File handler with rotation
        file_handler = logging.handlers.RotatingFileHandler(
            log_path / f"{ROOT}.log",
            maxBytes=max_bytes,
            backupCount=backup_count,
            encoding="utf-8",
        )
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(formatter)
        file_handler.addFilter(stamp)
        logger.addHandler(file_handler)

        # Errors only: crashed suites and rejected inputs
        error_handler = logging.handlers.RotatingFileHandler(
            log_path / f"{ROOT}_errors.log",
            maxBytes=max_bytes,
            backupCount=backup_count,
            encoding="utf-8",
        )
        error_handler.setLevel(logging.ERROR)
        error_handler.setFormatter(formatter)
        error_handler.addFilter(stamp)
        logger.addHandler(error_handler)

    return logger


def get_logger(name: Optional[str] = None) -> logging.Logger:
    """Get a logger under the mcat tree."""
    if name:
        return logging.getLogger(f"{ROOT}.{name}")
    return logging.getLogger(ROOT)
