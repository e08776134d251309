"""Miner configuration: dataclass + JSON persistence."""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from chaskiq.constants import (
    DEFAULT_BATCH_SIZE,
    DEFAULT_WORKERS,
    DIACRITICS_REJECT,
    DIACRITICS_STRIP,
    REPORT_MARKDOWN,
    REPORT_TSV,
)
from chaskiq.errors import ConfigError
from chaskiq.utils.paths import get_config_path

log = logging.getLogger(__name__)

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass
class MinerConfig:
    """Persistent defaults for scans; command-line flags override them."""

    # Validation
    diacritics: str = DIACRITICS_REJECT

    # Scan pool
    workers: int = DEFAULT_WORKERS
    batch_size: int = DEFAULT_BATCH_SIZE

    # Data files ("" = bundled language map / no gloss index)
    language_map: str = ""
    gloss_index: str = ""

    # Output
    report_format: str = REPORT_TSV

    # Logging
    log_level: str = "INFO"
    log_to_file: bool = False

    def validate(self) -> None:
        """Raise ConfigError for values no scan can run with."""
        if self.diacritics not in (DIACRITICS_REJECT, DIACRITICS_STRIP):
            raise ConfigError(f"diacritics must be 'reject' or 'strip', not {self.diacritics!r}")
        if self.report_format not in (REPORT_TSV, REPORT_MARKDOWN):
            raise ConfigError(f"report_format must be 'tsv' or 'md', not {self.report_format!r}")
        if not isinstance(self.workers, int) or self.workers < 1:
            raise ConfigError(f"workers must be >= 1, not {self.workers}")
        if not isinstance(self.batch_size, int) or self.batch_size < 1:
            raise ConfigError(f"batch_size must be >= 1, not {self.batch_size}")
        if not isinstance(self.log_level, str) or self.log_level.upper() not in _LOG_LEVELS:
            raise ConfigError(f"log_level must be one of {', '.join(_LOG_LEVELS)}")


class ConfigManager:
    """Load and save MinerConfig to JSON under ~/.config/chaskiq."""

    def __init__(self, path: Path | None = None):
        self.path = path or get_config_path()
        self.config = self._load()

    def _load(self) -> MinerConfig:
        if self.path.exists():
            try:
                data = json.loads(self.path.read_text(encoding="utf-8"))
                known = {f.name for f in fields(MinerConfig)}
                return MinerConfig(**{k: v for k, v in data.items() if k in known})
            except Exception:
                log.warning("Failed to load config %s, using defaults", self.path, exc_info=True)
        return MinerConfig()

    def save(self) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.path.write_text(
            json.dumps(asdict(self.config), indent=2) + "\n",
            encoding="utf-8",
        )
        log.debug("Config saved to %s", self.path)

    def reset(self) -> None:
        self.config = MinerConfig()
        self.save()
