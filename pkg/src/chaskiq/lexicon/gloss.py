"""English glosses for headwords, from a flat index file.

Index lines are ``lang<TAB>headword<TAB>gloss;gloss;...``. The index can be
built offline from NLTK's WordNet and Open Multilingual WordNet with
:func:`build_wordnet_index`: every lemma of a language is listed with the
English lemmas of the synsets it belongs to.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from pathlib import Path
from typing import Any, Iterable, Protocol

from chaskiq.constants import GLOSS_SEPARATOR
from chaskiq.errors import ChaskiqError, FileUnreadableError, FileUnwritableError

log = logging.getLogger(__name__)


class GlossProvider(Protocol):
    def lookup(self, language: str, headword: str) -> list[str]: ...


class GlossIndex:
    """Immutable (language, case-folded headword) -> glosses table."""

    def __init__(self, entries: dict[tuple[str, str], list[str]] | None = None, malformed: int = 0) -> None:
        self._entries = {
            (lang, headword.casefold()): tuple(glosses)
            for (lang, headword), glosses in (entries or {}).items()
            if glosses
        }
        self.malformed = malformed

    def __len__(self) -> int:
        return len(self._entries)

    def lookup(self, language: str, headword: str) -> list[str]:
        return list(self._entries.get((language, headword.casefold()), ()))


def load_gloss_index(path: str | Path) -> GlossIndex:
    """Read an index file; malformed lines are counted, duplicate keys concatenated."""
    path = Path(path)
    entries: dict[tuple[str, str], list[str]] = defaultdict(list)
    malformed = 0
    try:
        with open(path, encoding="utf-8") as f:
            for lineno, line in enumerate(f, start=1):
                if not line.strip():
                    continue
                fields = [part.strip() for part in line.rstrip("\r\n").split("\t")]
                glosses = [g.strip() for g in fields[-1].split(GLOSS_SEPARATOR) if g.strip()]
                if len(fields) != 3 or not fields[0] or not fields[1] or not glosses:
                    malformed += 1
                    log.debug("%s:%d malformed gloss line", path.name, lineno)
                    continue
                entries[(fields[0], fields[1].casefold())].extend(glosses)
    except (OSError, UnicodeDecodeError) as exc:
        raise FileUnreadableError(f"cannot read gloss index {path}: {exc}") from exc
    if malformed:
        log.warning("%s: skipped %d malformed lines", path.name, malformed)
    log.info("Loaded %d glossed headwords from %s", len(entries), path)
    return GlossIndex(entries, malformed=malformed)


def lookup(index: GlossProvider, language: str, headword: str) -> list[str]:
    return index.lookup(language, headword)


def _load_wordnet() -> Any:
    try:
        from nltk.corpus import wordnet
    except ImportError as exc:
        raise ChaskiqError("nltk is not installed; pip install nltk") from exc
    return wordnet


def build_wordnet_index(path: str | Path, languages: Iterable[str], wordnet: Any = None) -> int:
    """Write a gloss index for *languages* (3-letter OMW codes); return rows written.

    *wordnet* defaults to ``nltk.corpus.wordnet``; any object with
    ``all_lemma_names(lang=)`` and ``synsets(lemma, lang=)`` works.
    """
    wordnet = wordnet or _load_wordnet()
    path = Path(path)
    rows = 0
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            for lang in languages:
                try:
                    names = sorted(set(wordnet.all_lemma_names(lang=lang)))
                except KeyError:
                    log.warning("WordNet has no language %r, skipped", lang)
                    continue
                except LookupError as exc:
                    raise ChaskiqError(
                        "WordNet data missing; run nltk.download('wordnet') and nltk.download('omw-1.4')"
                    ) from exc
                except Exception:
                    log.warning("WordNet has no lemmas for %r, skipped", lang, exc_info=True)
                    continue
                written = 0
                for name in names:
                    glosses: list[str] = []
                    for synset in wordnet.synsets(name, lang=lang):
                        for lemma in synset.lemma_names():
                            gloss = lemma.replace("_", " ")
                            if gloss not in glosses:
                                glosses.append(gloss)
                    if glosses:
                        headword = name.replace("_", " ")
                        f.write(f"{lang}\t{headword}\t{GLOSS_SEPARATOR.join(glosses)}\n")
                        written += 1
                log.info("Indexed %d %s lemmas", written, lang)
                rows += written
    except OSError as exc:
        raise FileUnwritableError(f"cannot write gloss index {path}: {exc}") from exc
    return rows
