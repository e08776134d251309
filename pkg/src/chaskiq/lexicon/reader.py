"""Read pronunciation dictionaries into DictEntry records.

Two layouts are supported:

* open-dict (ipa-dict): ``headword<TAB>/ipa/[, /ipa/...]``. Some exports use
  a comma instead of the tab, accepted when the line has no tab.
* WikiPron: ``headword<TAB>p h o n e s``, one pronunciation per line.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Iterator

from chaskiq.constants import FORMAT_OPEN_DICT, FORMAT_WIKIPRON, MALFORMED_WARN_LIMIT
from chaskiq.errors import FileUnreadableError, MalformedLineError
from chaskiq.lexicon.langcodes import LanguageCodeMap, relabel_language

log = logging.getLogger(__name__)

_VARIANT_SEPARATOR_RE = re.compile(r",\s*")
_RAW_LANGUAGE_RE = re.compile(r"^[a-z]{2,3}([_-][A-Za-z]+)?$")


class DictFormat(Enum):
    OPEN_DICT = FORMAT_OPEN_DICT
    WIKIPRON = FORMAT_WIKIPRON


@dataclass(frozen=True)
class DictEntry:
    """One headword with its pronunciation variants, in file order."""

    headword: str
    language: str
    variants: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.headword:
            raise ValueError("headword must not be empty")
        if not self.variants:
            raise ValueError(f"{self.headword!r} has no pronunciation")
        if not _RAW_LANGUAGE_RE.match(self.language):
            raise ValueError(f"not a language label: {self.language!r}")


def parse_line(line: str, fmt: DictFormat) -> tuple[str, list[str]]:
    """Split one physical line into (headword, variants).

    Raises:
        MalformedLineError: wrong field count or an empty field.
    """
    line = line.rstrip("\r\n")
    if fmt is DictFormat.OPEN_DICT:
        fields = line.split("\t") if "\t" in line else line.split(",", 1)
    else:
        fields = line.split("\t")
    if len(fields) != 2:
        raise MalformedLineError(f"expected 2 fields, got {len(fields)}")

    headword, pron = fields[0].strip(), fields[1].strip()
    if fmt is DictFormat.OPEN_DICT:
        variants = [v.strip() for v in _VARIANT_SEPARATOR_RE.split(pron) if v.strip()]
    else:
        variants = [pron] if pron else []
    if not headword or not variants:
        raise MalformedLineError("empty headword or pronunciation")
    return headword, variants


def language_label_from_path(path: Path, fmt: DictFormat) -> str:
    """``es_MX.txt`` -> ``es_MX``; ``spa_latn_la_broad.tsv`` -> ``spa``."""
    if fmt is DictFormat.WIKIPRON:
        return path.stem.split("_")[0]
    return path.stem


@dataclass
class ReadStats:
    path: Path
    lines: int = 0        # non-empty lines
    entries: int = 0
    malformed: int = 0
    duplicates: int = 0   # lines whose every variant was already seen

    @property
    def skipped(self) -> int:
        return self.malformed + self.duplicates


@dataclass
class DictionaryStream:
    """Iterable of the DictEntry records in one file.

    ``stats`` is complete once iteration finishes. Iterating again re-reads
    the file and resets the counts.
    """

    path: Path
    fmt: DictFormat
    language: str
    stats: ReadStats = field(init=False)

    def __post_init__(self) -> None:
        self.stats = ReadStats(self.path)

    def __iter__(self) -> Iterator[DictEntry]:
        self.stats = stats = ReadStats(self.path)
        seen: dict[str, set[str]] = {}
        try:
            with open(self.path, encoding="utf-8") as f:
                for lineno, line in enumerate(f, start=1):
                    if not line.strip():
                        continue
                    stats.lines += 1
                    try:
                        headword, variants = parse_line(line, self.fmt)
                    except MalformedLineError as exc:
                        stats.malformed += 1
                        level = logging.WARNING if stats.malformed <= MALFORMED_WARN_LIMIT else logging.DEBUG
                        log.log(level, "%s:%d skipped: %s", self.path.name, lineno, exc)
                        continue
                    known = seen.setdefault(headword, set())
                    fresh = tuple(v for v in dict.fromkeys(variants) if v not in known)
                    if not fresh:
                        stats.duplicates += 1
                        continue
                    known.update(fresh)
                    stats.entries += 1
                    yield DictEntry(headword, self.language, fresh)
        except (OSError, UnicodeDecodeError) as exc:
            raise FileUnreadableError(f"cannot read {self.path}: {exc}") from exc
        log.info(
            "Read %s [%s]: %d entries, %d skipped (%d malformed, %d duplicate)",
            self.path.name, self.language, stats.entries, stats.skipped,
            stats.malformed, stats.duplicates,
        )


def read_dictionary(
    path: str | Path,
    fmt: DictFormat | str,
    language: str | None = None,
    code_map: LanguageCodeMap | None = None,
) -> DictionaryStream:
    """Open a dictionary file for streaming.

    *language* overrides the label derived from the file name. With
    *code_map* the label is relabelled to its 3-letter code up front, so an
    unknown code (UnknownCodeError) skips the file before it is read.

    Raises:
        FileUnreadableError: the path is not a readable file.
        UnknownCodeError: the label is not in *code_map*.
    """
    path = Path(path)
    fmt = DictFormat(fmt)
    if not path.is_file():
        raise FileUnreadableError(f"not a file: {path}")
    label = language or language_label_from_path(path, fmt)
    if code_map is not None:
        label = relabel_language(label, code_map)
    return DictionaryStream(path, fmt, label)
