"""
Logging for the news-market toolkit.

All records go under the ``news_market`` logger. The console handler writes to
standard error so that standard output carries only command results.
"""

import logging
import sys
from pathlib import Path
from typing import Optional

ROOT_LOGGER = 'news_market'
LOG_FORMAT = '%(asctime)s %(levelname)-7s %(name)s: %(message)s'


def _level(name: str) -> int:
    level = logging.getLevelName(name.upper())
    if not isinstance(level, int):
        raise ValueError(f"unknown log level '{name}'")
    return level


def setup_logging(log_level: str = 'INFO', log_file: Optional[str] = None,
                  console_output: bool = True) -> logging.Logger:
    """
    Configure the toolkit's logger; safe to call repeatedly.

    Args:
        log_level: Console level name (DEBUG, INFO, WARNING, ERROR)
        log_file: Optional path that receives every record at DEBUG
        console_output: Attach the standard-error handler

    Returns:
        The ``news_market`` logger
    """
    console_level = _level(log_level)
    logger = logging.getLogger(ROOT_LOGGER)
    logger.handlers.clear()
    logger.propagate = False
    logger.setLevel(logging.DEBUG if log_file else console_level)

    formatter = logging.Formatter(LOG_FORMAT)
    if console_output:
        console = logging.StreamHandler(sys.stderr)
        console.setLevel(console_level)
        console.setFormatter(formatter)
        logger.addHandler(console)

    if log_file:
        path = Path(log_file)
        path.parent.mkdir(parents=True, exist_ok=True)
        to_file = logging.FileHandler(path, encoding='utf-8')
        to_file.setLevel(logging.DEBUG)
        to_file.setFormatter(formatter)
        logger.addHandler(to_file)

    return logger


def get_logger(name: str) -> logging.Logger:
    """Logger for one module of the toolkit."""
    return logging.getLogger(f'{ROOT_LOGGER}.{name}')
