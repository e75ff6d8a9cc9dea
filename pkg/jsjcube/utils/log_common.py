"""Console and file sinks for loguru, installed once per process."""

import sys
from pathlib import Path

from loguru import logger

from jsjcube.config.config import Configs

_configured = False


def _verbose_filter(record: dict) -> bool:
    """drop DEBUG records and ERROR tracebacks unless ``log_verbose``"""
    if Configs.basic_config.log_verbose:
        return True
    if record["level"].no <= 10:
        return False
    if record["level"].no >= 40:
        record["exception"] = None
    return True


def log_path(log_file: str) -> Path:
    """relative names land in the log directory; a missing ``.log`` suffix is added"""
    path = Path(log_file if log_file.endswith(".log") else f"{log_file}.log")
    if not path.is_absolute():
        Configs.basic_config.make_dirs()
        path = Configs.basic_config.LOG_PATH / path
    path.parent.mkdir(parents=True, exist_ok=True)
    return path.resolve()


def setup_logging(log_file: str | None = "jsjcube.log", verbose: bool | None = None) -> None:
    """Install the stderr and file sinks. Later calls only change the verbosity."""
    global _configured
    if verbose is not None:
        Configs.basic_config.pin(log_verbose=verbose)
    if _configured:
        return
    logger.remove()
    logger.add(sys.stderr, colorize=True, level="DEBUG", filter=_verbose_filter)
    if log_file:
        logger.add(log_path(log_file), colorize=False, level="DEBUG", filter=_verbose_filter)
    _configured = True
