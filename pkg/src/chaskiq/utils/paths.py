"""Per-user directories and bundled data files."""

import os
from pathlib import Path

from chaskiq.constants import APP_NAME


def get_data_path(name: str) -> Path:
    """Return the path to a data file shipped inside the package (``chaskiq/data/``)."""
    return Path(__file__).resolve().parents[1] / "data" / name


def get_config_dir() -> Path:
    """Return the chaskiq directory under $XDG_CONFIG_HOME (default ~/.config)."""
    base = Path(os.environ.get("XDG_CONFIG_HOME") or Path.home() / ".config")
    return base / APP_NAME.lower()


def get_config_path() -> Path:
    """Return path to the config JSON file."""
    return get_config_dir() / "config.json"


def get_log_dir() -> Path:
    """Return the logs directory under $XDG_STATE_HOME, creating it if needed."""
    base = Path(os.environ.get("XDG_STATE_HOME") or Path.home() / ".local" / "state")
    log_dir = base / APP_NAME.lower() / "logs"
    log_dir.mkdir(parents=True, exist_ok=True)
    return log_dir
