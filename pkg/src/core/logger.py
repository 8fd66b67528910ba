"""Logging with colored console output and optional rotating files."""

import logging
import sys
from datetime import datetime
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

ROOT_LOGGER = "rsk-lab"

# ANSI colors for terminal
COLORS = {
    "DEBUG": "\033[36m",     # Cyan
    "INFO": "\033[32m",      # Green
    "WARNING": "\033[33m",   # Yellow
    "ERROR": "\033[31m",     # Red
    "CRITICAL": "\033[35m",  # Magenta
    "RESET": "\033[0m",
}

_log_dir: Optional[Path] = None


class ColoredFormatter(logging.Formatter):
    """Formatter that adds colors to terminal output."""

    def format(self, record):
        record = logging.makeLogRecord(record.__dict__)
        levelname = record.levelname
        if levelname in COLORS:
            record.levelname = f"{COLORS[levelname]}{levelname}{COLORS['RESET']}"
            record.msg = f"{COLORS[levelname]}{record.msg}{COLORS['RESET']}"
        return super().format(record)


def configure_logging(level: str = "WARNING", log_dir: Optional[str] = None) -> None:
    """
    Set the root level and, optionally, the directory for rotating log files.

    Called once by the CLI after the config is loaded. Loggers created
    afterwards pick up the file handler.
    """
    global _log_dir
    _log_dir = Path(log_dir) if log_dir else None

    root = get_logger(ROOT_LOGGER)
    root.setLevel(getattr(logging, level.upper(), logging.WARNING))
    if _log_dir and not any(isinstance(h, RotatingFileHandler) for h in root.handlers):
        root.addHandler(_file_handler(_log_dir))


def _file_handler(log_dir: Path) -> RotatingFileHandler:
    log_dir.mkdir(parents=True, exist_ok=True)
    log_file = log_dir / f"rsk-lab_{datetime.now().strftime('%Y%m%d')}.log"
    file_handler = RotatingFileHandler(
        log_file,
        maxBytes=10 * 1024 * 1024,  # 10 MB
        backupCount=5,
        encoding="utf-8"
    )
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(logging.Formatter(
        "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S"
    ))
    return file_handler


def get_logger(name: str = ROOT_LOGGER, level: Optional[str] = None) -> logging.Logger:
    """
    Get or create a logger under the rsk-lab tree.

    Only the root logger carries handlers; module loggers
    (``src.search.walks`` etc.) are re-parented under it so one
    ``configure_logging`` call controls them all. Console output goes to
    stderr because stdout carries JSON documents.

    Args:
        name: Logger name (module ``__name__`` is fine)
        level: Optional level override (DEBUG, INFO, WARNING, ERROR, CRITICAL)

    Returns:
        Configured logger instance
    """
    if name != ROOT_LOGGER and not name.startswith(ROOT_LOGGER + "."):
        name = f"{ROOT_LOGGER}.{name}"
    logger = logging.getLogger(name)

    if level:
        logger.setLevel(getattr(logging, level.upper()))

    if name != ROOT_LOGGER or logger.handlers:
        return logger

    logger.setLevel(logging.WARNING)
    logger.propagate = False

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.DEBUG)
    console_handler.setFormatter(ColoredFormatter(
        "%(asctime)s │ %(levelname)-8s │ %(message)s",
        datefmt="%H:%M:%S"
    ))
    logger.addHandler(console_handler)

    return logger


# Convenience loggers for different concerns
def get_search_logger() -> logging.Logger:
    """Logger for search and sweep runs."""
    return get_logger(f"{ROOT_LOGGER}.search")


def get_verify_logger() -> logging.Logger:
    """Logger for verification suites."""
    return get_logger(f"{ROOT_LOGGER}.verify")


get_logger(ROOT_LOGGER)
