"""Normalize raw pronunciation strings before tokenizing."""

from __future__ import annotations

import re
import unicodedata

# Delimiters wrapping a transcription: /phonemic/ or [phonetic]
_DELIMITERS = "/[]"

# Primary/secondary stress, syllable dots and any whitespace (WikiPron
# separates segments with spaces)
_SUPRASEGMENTAL_RE = re.compile(r"[ˈˌ.\s]")


def normalize(raw_pron: str) -> str:
    """Return *raw_pron* stripped of delimiters, stress, dots and spaces.

    The result is in canonical decomposition (NFD) so combining diacritics
    are separate characters. Tie bars stay for the tokenizer. An empty
    result is legal; validation rejects it later.
    """
    text = raw_pron.strip().strip(_DELIMITERS)
    text = unicodedata.normalize("NFD", text)
    return _SUPRASEGMENTAL_RE.sub("", text)
