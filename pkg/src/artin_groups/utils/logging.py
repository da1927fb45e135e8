"""Logging for the Artin groups engine.

Command results own standard output (JSON or rich tables), so every log
record goes to standard error through rich, plus an optional plain file.
"""

import logging
from pathlib import Path
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

from .config import config

ROOT_LOGGER = 'artin_groups'
FILE_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def _level(name: str) -> int:
    value = logging.getLevelName(name.upper())
    if not isinstance(value, int):
        raise ValueError(f"Unknown log level: {name}")
    return value


def setup_logging(
    level: Optional[str] = None,
    log_file: Optional[str] = None,
    console: bool = True
) -> logging.Logger:
    """Configure the package logger.

    Args:
        level: Logging level name; defaults to ``logging.level``
        log_file: Optional log file; defaults to ``logging.file``
        console: Whether to attach the stderr handler

    Returns:
        The ``artin_groups`` logger
    """
    level_no = _level(level or config.log_level)
    log_file = log_file or config.log_file

    logger = logging.getLogger(ROOT_LOGGER)
    logger.setLevel(level_no)
    logger.propagate = False
    logger.handlers.clear()

    if console:
        handler = RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=False)
        handler.setLevel(level_no)
        logger.addHandler(handler)

    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setLevel(level_no)
        file_handler.setFormatter(logging.Formatter(FILE_FORMAT, datefmt='%Y-%m-%d %H:%M:%S'))
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str) -> logging.Logger:
    """Child of the package logger for a module ``__name__``."""
    if name == ROOT_LOGGER or name.startswith(ROOT_LOGGER + '.'):
        return logging.getLogger(name)
    return logging.getLogger(f'{ROOT_LOGGER}.{name}')


logger = setup_logging()
