import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Optional

LOGGER_NAME = "catalan_cohorts"
FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


def _add_file_handler(logger: logging.Logger, log_dir: str) -> None:
    if any(isinstance(h, RotatingFileHandler) for h in logger.handlers):
        return
    log_path = Path(log_dir)
    log_path.mkdir(parents=True, exist_ok=True)
    file_handler = RotatingFileHandler(
        log_path / "catalan-cohorts.log",
        maxBytes=5 * 1024 * 1024,
        backupCount=5,
        encoding="utf-8",
    )
    file_handler.setFormatter(logging.Formatter(FORMAT))
    logger.addHandler(file_handler)


def setup_logging(level=logging.INFO, log_dir: Optional[str] = None):
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(level)
    logger.propagate = False

    log_dir = log_dir or os.getenv("CATALAN_COHORTS_LOG_DIR")
    if logger.handlers:
        if log_dir:
            _add_file_handler(logger, log_dir)
        return logger

    # stdout carries JSON/CSV results
    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(logging.Formatter(FORMAT))
    logger.addHandler(stream_handler)

    if log_dir:
        _add_file_handler(logger, log_dir)

    return logger


def get_logger(name: str) -> logging.Logger:
    """Child logger under the shared project logger."""
    return logging.getLogger(f"{LOGGER_NAME}.{name}")
