"""Write eligible words in the official Quechua alphabet, and read them back."""

from __future__ import annotations

import unicodedata

from chaskiq.constants import SYLLABLE_SEPARATOR
from chaskiq.errors import IneligibleInputError, SpellingError
from chaskiq.phonology.inventory import Grapheme, MappedSegment
from chaskiq.phonology.phonotactics import Reason, ValidationResult, validate_segments

# Longest spellings first so "chh" wins over "ch" and "ch" over "c..."
_SPELLINGS = sorted((g.value for g in Grapheme), key=len, reverse=True)

# Apostrophe look-alikes accepted when reading a spelling
_APOSTROPHES = str.maketrans({"ʼ": "'", "’": "'"})


def transcribe(result: ValidationResult) -> str:
    """Spell an eligible word, e.g. [q ɔ s q ɔ] -> ``qusqu``.

    Raises:
        IneligibleInputError: *result* is not eligible.
    """
    if not result.eligible:
        raise IneligibleInputError(
            f"cannot transcribe an ineligible word ({result.reason.value}: {result.detail})"
        )
    return "".join(seg.grapheme.value for seg in result.segments)


def read_spelling(text: str) -> list[MappedSegment]:
    """Split a Quechua spelling into graphemes by longest match.

    Dots are syllable boundaries; no grapheme spans one, so ``p.h`` reads as
    p + h while ``ph`` is one grapheme.
    """
    text = unicodedata.normalize("NFC", text.strip().lower()).translate(_APOSTROPHES)
    segments: list[MappedSegment] = []
    i = 0
    while i < len(text):
        if text[i] == SYLLABLE_SEPARATOR:
            i += 1
            continue
        spelling = next((s for s in _SPELLINGS if text.startswith(s, i)), None)
        if spelling is None:
            raise SpellingError(f"{text[i]!r} at position {i} is not part of any Quechua spelling")
        segments.append(MappedSegment(Grapheme(spelling)))
        i += len(spelling)
    return segments


def validate_spelling(text: str) -> ValidationResult:
    """Re-validate a written word; unreadable text is UNMAPPED_PHONE."""
    try:
        segments = read_spelling(text)
    except SpellingError as exc:
        return ValidationResult(Reason.UNMAPPED_PHONE, detail=str(exc))
    return validate_segments(segments)
