"""Configure stderr + optional file logging."""

from __future__ import annotations

import logging
import sys
from datetime import datetime
from pathlib import Path

from chaskiq.constants import APP_NAME

# Handlers installed by a previous call, removed on the next one
_installed: list[logging.Handler] = []


def setup_logging(
    level: int = logging.INFO,
    log_file: str | Path | None = None,
    to_log_dir: bool = False,
) -> None:
    """Set up logging to stderr and, optionally, a log file.

    Data goes to files or stdout, so the console handler writes to stderr.
    With *to_log_dir* and no explicit *log_file* a daily file is written to
    the per-user log directory.
    """
    fmt = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
    datefmt = "%H:%M:%S"

    root = logging.getLogger()
    for handler in _installed:
        root.removeHandler(handler)
        handler.close()
    _installed.clear()
    root.setLevel(min(level, logging.DEBUG) if (log_file or to_log_dir) else level)

    # Console handler
    console = logging.StreamHandler(sys.stderr)
    console.setLevel(level)
    console.setFormatter(logging.Formatter(fmt, datefmt=datefmt))
    root.addHandler(console)
    _installed.append(console)

    if log_file is None and to_log_dir:
        from chaskiq.utils.paths import get_log_dir

        log_file = get_log_dir() / f"{APP_NAME.lower()}_{datetime.now():%Y-%m-%d}.log"

    if log_file is not None:
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(fmt, datefmt=datefmt))
        root.addHandler(file_handler)
        _installed.append(file_handler)
        logging.getLogger(__name__).debug("Logging to file: %s", log_file)
