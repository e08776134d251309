"""ISO 639-1 -> ISO 639-3 relabelling of dictionary language labels."""

from __future__ import annotations

import logging
import re
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

from chaskiq.constants import LANGUAGE_MAP_FILE
from chaskiq.errors import FileUnreadableError, LanguageMapError, UnknownCodeError
from chaskiq.utils.paths import get_data_path

log = logging.getLogger(__name__)

_LABEL_RE = re.compile(r"^([A-Za-z]{2,3})(?:[_-][A-Za-z]+)?$")
_TWO_LETTER_RE = re.compile(r"^[a-z]{2}$")
_THREE_LETTER_RE = re.compile(r"^[a-z]{3}$")


class LanguageCodeMap:
    """Injective table from 2-letter to 3-letter codes."""

    def __init__(self, entries: Mapping[str, str]) -> None:
        owners: dict[str, str] = {}
        for short, long in entries.items():
            if not _TWO_LETTER_RE.match(short) or not _THREE_LETTER_RE.match(long):
                raise LanguageMapError(f"bad pair {short!r} -> {long!r}")
            if long in owners:
                raise LanguageMapError(f"{owners[long]!r} and {short!r} both map to {long!r}")
            owners[long] = short
        self.entries: Mapping[str, str] = MappingProxyType(dict(entries))

    def __contains__(self, code: object) -> bool:
        return code in self.entries

    def __getitem__(self, code: str) -> str:
        return self.entries[code]

    def __len__(self) -> int:
        return len(self.entries)

    @classmethod
    def from_file(cls, path: str | Path) -> "LanguageCodeMap":
        path = Path(path)
        entries: dict[str, str] = {}
        try:
            lines = path.read_text(encoding="utf-8").splitlines()
        except (OSError, UnicodeDecodeError) as exc:
            raise FileUnreadableError(f"cannot read language map {path}: {exc}") from exc
        for lineno, line in enumerate(lines, start=1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split("\t")
            if len(fields) != 2:
                raise LanguageMapError(f"{path.name}:{lineno}: expected 2 tab-separated fields")
            short, long = fields[0].strip(), fields[1].strip()
            if entries.get(short, long) != long:
                raise LanguageMapError(f"{path.name}:{lineno}: {short!r} mapped twice")
            entries[short] = long
        log.debug("Loaded %d language codes from %s", len(entries), path)
        return cls(entries)


def load_language_map(path: str | Path | None = None) -> LanguageCodeMap:
    """Load *path*, or the bundled ISO 639-1 table when None."""
    return LanguageCodeMap.from_file(path or get_data_path(LANGUAGE_MAP_FILE))


def relabel_language(code: str, code_map: LanguageCodeMap) -> str:
    """``es_MX`` -> ``spa``, ``sw`` -> ``swa``; 3-letter codes pass through.

    Raises:
        UnknownCodeError: malformed label or a 2-letter code absent from the map.
    """
    match = _LABEL_RE.match(code.strip())
    if match is None:
        raise UnknownCodeError(f"not a language code: {code!r}")
    base = match.group(1).lower()
    if len(base) == 3:
        return base
    if base not in code_map:
        raise UnknownCodeError(f"no 3-letter code for {code!r}")
    return code_map[base]
