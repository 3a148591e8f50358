"""
Logging for pimsim.

Library modules only ask for a logger; the CLI configures handlers once per
process with setup_logging(). The file handler is a ConcurrentRotatingFileHandler
so DPU worker threads and any helper processes share one size-rotated log.

usage:
    from pimsim.utils.logger import get_logger

    logger = get_logger(__name__)
    logger.info("dispatching %d components", n)

    # cli entry point only
    from pimsim.utils.logger import setup_logging
    setup_logging()

environment:
    PIMSIM_LOG_DIR    log directory (default ./logs)
    PIMSIM_LOG_LEVEL  console level name (default WARNING)
"""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Final

from concurrent_log_handler import ConcurrentRotatingFileHandler

LOG_FORMAT: Final[str] = "%(asctime)s - %(process)d - %(name)s - %(levelname)s - %(message)s"
LOG_FILE_NAME: Final[str] = "pimsim.log"


def log_dir() -> Path:
    return Path(os.environ.get("PIMSIM_LOG_DIR", "logs"))


def _level_from_env(default: int) -> int:
    name = os.environ.get("PIMSIM_LOG_LEVEL")
    if not name:
        return default
    level = logging.getLevelName(name.upper())
    return level if isinstance(level, int) else default


def setup_logging(
    log_file: Path | None = None,
    max_bytes: int = 10 * 1024 * 1024,
    backup_count: int = 5,
    console_level: int | None = None,
    file_level: int = logging.DEBUG,
) -> Path:
    """Configure the root logger with a rotating file handler and a console handler.

    Returns the log file path. Safe to call again; force=True replaces earlier handlers.
    """
    if log_file is None:
        directory = log_dir()
        directory.mkdir(parents=True, exist_ok=True)
        log_file = directory / LOG_FILE_NAME
    else:
        log_file.parent.mkdir(parents=True, exist_ok=True)

    formatter = logging.Formatter(LOG_FORMAT)

    file_handler = ConcurrentRotatingFileHandler(
        str(log_file),
        maxBytes=max_bytes,
        backupCount=backup_count,
        encoding="utf-8",
        use_gzip=True,
    )
    file_handler.setFormatter(formatter)
    file_handler.setLevel(file_level)

    console_handler = logging.StreamHandler()
    console_handler.setFormatter(formatter)
    console_handler.setLevel(console_level if console_level is not None else _level_from_env(logging.WARNING))

    logging.basicConfig(level=logging.DEBUG, handlers=[file_handler, console_handler], force=True)
    return log_file


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
