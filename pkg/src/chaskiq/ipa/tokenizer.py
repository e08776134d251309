"""Split normalized IPA into phones by maximal munch over the inventory.

Symbols are matched longest-first, so ``tʃ`` is one affricate rather than
t + ʃ. Aspiration (ʰ) and ejective (ʼ, or ``'`` after a stop/affricate)
attach to the phone before them. Everything else outside the inventory is
either a diacritic, handled by the :class:`DiacriticPolicy`, or an unknown
symbol that makes the word impossible to hear as Quechua.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, replace
from enum import Enum

from chaskiq.errors import DiacriticPresentError, UnknownSymbolError


class DiacriticPolicy(Enum):
    """What to do with length, tone and other diacritic marks."""

    REJECT = "reject"
    STRIP = "strip"


AFFRICATE = "tʃ"  # tʃ
GLIDE = "ɰ"       # ɰ, spelled by position during validation

# Canonical base symbols: the IPA column of the official alphabet table
VOWEL_BASES = frozenset("aɑiɪɛeʊuɔo")
CONSONANT_BASES = frozenset({
    AFFRICATE, "ʃ", "h", "k", "x", "l", "ʎ", "m", "n", "ɲ",
    "p", "β", "ɸ", "q", "ɢ", "χ", "r", "s", "t", "w", "j",
    GLIDE,
})
BASE_SYMBOLS = VOWEL_BASES | CONSONANT_BASES

# Bases an ASCII apostrophe may follow as an ejective mark
_STOPS = frozenset({"p", "t", "k", "q", "ɢ", AFFRICATE})

ASPIRATION = "ʰ"  # ʰ
EJECTIVE = "ʼ"    # ʼ
ASCII_EJECTIVE = "'"
TIE_BARS = "\u0361\u035c"

# Alternative spellings -> (canonical base, aspirated). Longer entries win
# over their prefixes. Combining sequences are in NFD, as normalize() leaves them.
_SYMBOLS: dict[str, tuple[str, bool]] = {
    "t\u0361ʃ": (AFFRICATE, False),  # t͡ʃ
    "t\u035cʃ": (AFFRICATE, False),  # t͜ʃ
    "ʧ": (AFFRICATE, False),         # ʧ
    "c\u030c": (AFFRICATE, False),   # č
    "s\u030c": ("ʃ", False),         # š
    "k\u0304": ("k", False),         # k̄
    "pɸ": ("p", True),               # pɸ
    "pφ": ("p", True),               # pφ
    "φ": ("ɸ", False),               # Greek φ
}
for _base in BASE_SYMBOLS:
    _SYMBOLS.setdefault(_base, (_base, False))
_MAX_SYMBOL_LEN = max(len(s) for s in _SYMBOLS)

# Multi-character symbols whose second character would otherwise count as a
# diacritic; the policy pass leaves them intact.
_PROTECTED = tuple(
    s for s in _SYMBOLS
    if len(s) > 1 and any(unicodedata.combining(c) for c in s[1:])
)

# Tone digits and arrows used by some sources instead of tone letters
_TONE_EXTRAS = frozenset("¹²³⁰⁴⁵⁶⁷⁸⁹↗↘")


@dataclass(frozen=True)
class Phone:
    """One tokenized segment: a canonical base plus laryngeal modifiers."""

    base: str
    aspirated: bool = False
    ejective: bool = False
    raw: str = ""

    def __post_init__(self) -> None:
        if self.base not in BASE_SYMBOLS:
            raise ValueError(f"not a recognized base symbol: {self.base!r}")
        if self.aspirated and self.ejective:
            raise ValueError("a phone cannot be both aspirated and ejective")

    @property
    def label(self) -> str:
        """Canonical IPA for the phone, e.g. ``tʃʼ``."""
        if self.aspirated:
            return self.base + ASPIRATION
        if self.ejective:
            return self.base + EJECTIVE
        return self.base

    @property
    def is_vowel(self) -> bool:
        return self.base in VOWEL_BASES


def is_diacritic(ch: str) -> bool:
    """True for marks the policy governs: combining marks, modifier letters
    and symbols (length, tone letters, secondary articulation) and tone digits.

    Tie bars and the laryngeal modifiers are not diacritics.
    """
    if ch in TIE_BARS or ch in (ASPIRATION, EJECTIVE):
        return False
    if unicodedata.combining(ch):
        return True
    return unicodedata.category(ch) in ("Lm", "Sk") or ch in _TONE_EXTRAS


def _policy_pass(normalized: str, policy: DiacriticPolicy) -> tuple[str, list[int]]:
    """Apply *policy*; return the kept text and each kept char's source index."""
    kept: list[str] = []
    origin: list[int] = []
    i, n = 0, len(normalized)
    while i < n:
        protected = next((s for s in _PROTECTED if normalized.startswith(s, i)), None)
        if protected is not None:
            kept.extend(protected)
            origin.extend(range(i, i + len(protected)))
            i += len(protected)
            continue
        ch = normalized[i]
        if is_diacritic(ch):
            if policy is DiacriticPolicy.REJECT:
                raise DiacriticPresentError(i, ch)
        else:
            kept.append(ch)
            origin.append(i)
        i += 1
    return "".join(kept), origin


def apply_policy(normalized: str, policy: DiacriticPolicy = DiacriticPolicy.REJECT) -> str:
    """Return *normalized* after the diacritic policy: unchanged under REJECT
    (or DiacriticPresentError), diacritics deleted under STRIP."""
    return _policy_pass(normalized, policy)[0]


def _attach(phones: list[Phone], mark: str, position: int) -> Phone:
    """Return the previous phone with *mark* applied as aspiration/ejective."""
    if not phones:
        raise UnknownSymbolError(position, mark)
    prev = phones[-1]
    if prev.aspirated or prev.ejective:
        raise UnknownSymbolError(position, mark)
    if mark == ASCII_EJECTIVE and prev.base not in _STOPS:
        raise UnknownSymbolError(position, mark)
    if mark == ASPIRATION:
        return replace(prev, aspirated=True, raw=prev.raw + mark)
    return replace(prev, ejective=True, raw=prev.raw + mark)


def tokenize(normalized: str, policy: DiacriticPolicy = DiacriticPolicy.REJECT) -> list[Phone]:
    """Split *normalized* (output of :func:`normalize`) into phones.

    Raises:
        DiacriticPresentError: a diacritic under the REJECT policy.
        UnknownSymbolError: a character matching no inventory symbol.

    Error positions index into *normalized*.
    """
    text, origin = _policy_pass(normalized, policy)
    phones: list[Phone] = []
    i, n = 0, len(text)
    while i < n:
        for length in range(min(_MAX_SYMBOL_LEN, n - i), 0, -1):
            symbol = _SYMBOLS.get(text[i:i + length])
            if symbol is not None:
                base, aspirated = symbol
                phones.append(Phone(base, aspirated=aspirated, raw=text[i:i + length]))
                i += length
                break
        else:
            ch = text[i]
            if ch in (ASPIRATION, EJECTIVE, ASCII_EJECTIVE):
                phones[-1:] = [_attach(phones, ch, origin[i])]
            else:
                raise UnknownSymbolError(origin[i], ch)
            i += 1
    return phones
