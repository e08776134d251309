"""Syllabify mapped segments and decide whether a word can be written in Quechua.

Quechua syllables are V, VC, CV or CVC. Two consonants between vowels are
split coda + onset; longer clusters and clusters at the word edges do not
parse. Codas are restricted, word-final codas more so, and mid vowels need
a uvular neighbour.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from chaskiq.constants import SYLLABLE_SEPARATOR
from chaskiq.errors import ChaskiqError, DiacriticPresentError, UnknownSymbolError
from chaskiq.ipa.normalizer import normalize
from chaskiq.ipa.tokenizer import GLIDE, DiacriticPolicy, Phone, tokenize
from chaskiq.phonology.inventory import Grapheme, MappedSegment, is_uvular, map_phone

log = logging.getLogger(__name__)


class Reason(Enum):
    OK = "OK"
    UNMAPPED_PHONE = "UNMAPPED_PHONE"
    DIACRITIC = "DIACRITIC"
    VOWEL_HIATUS = "VOWEL_HIATUS"
    CLUSTER_TOO_LONG = "CLUSTER_TOO_LONG"
    EDGE_CLUSTER = "EDGE_CLUSTER"
    BAD_CODA = "BAD_CODA"
    BAD_WORD_FINAL = "BAD_WORD_FINAL"
    BAD_VOWEL_CONTEXT = "BAD_VOWEL_CONTEXT"
    EMPTY = "EMPTY"
    NO_VOWEL = "NO_VOWEL"


# Consonants allowed to close a syllable; h, ñ and the aspirated and
# ejective series never are.
CODA_GRAPHEMES = frozenset({
    Grapheme.P, Grapheme.K, Grapheme.Q, Grapheme.CH, Grapheme.L, Grapheme.LL,
    Grapheme.M, Grapheme.N, Grapheme.R, Grapheme.S, Grapheme.T, Grapheme.W,
    Grapheme.Y,
})
WORD_FINAL_GRAPHEMES = CODA_GRAPHEMES - {Grapheme.T}


class SyllabificationError(ChaskiqError):
    """A segment sequence has no V/VC/CV/CVC parse."""

    def __init__(self, reason: Reason, message: str) -> None:
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class Syllable:
    nucleus: Grapheme
    onset: Grapheme | None = None
    coda: Grapheme | None = None
    index: int = 0

    def __post_init__(self) -> None:
        if not self.nucleus.is_vowel:
            raise ValueError(f"nucleus must be a vowel, got {self.nucleus.value!r}")
        for margin in (self.onset, self.coda):
            if margin is not None and margin.is_vowel:
                raise ValueError(f"onset/coda must be a consonant, got {margin.value!r}")

    @property
    def graphemes(self) -> tuple[Grapheme, ...]:
        return tuple(g for g in (self.onset, self.nucleus, self.coda) if g is not None)

    @property
    def shape(self) -> str:
        return ("C" if self.onset else "") + "V" + ("C" if self.coda else "")

    @property
    def spelling(self) -> str:
        return "".join(g.value for g in self.graphemes)


@dataclass(frozen=True)
class ValidationResult:
    """Verdict for one word: syllables when eligible, a reason when not."""

    reason: Reason
    syllables: tuple[Syllable, ...] = ()
    segments: tuple[MappedSegment, ...] = ()
    detail: str = ""

    def __post_init__(self) -> None:
        if (self.reason is Reason.OK) != bool(self.syllables):
            raise ValueError("syllables are present exactly when the word is eligible")

    @property
    def eligible(self) -> bool:
        return self.reason is Reason.OK

    @property
    def syllabification(self) -> str:
        """Dot-joined syllable spellings, e.g. ``wak.cha``; empty if ineligible."""
        return SYLLABLE_SEPARATOR.join(s.spelling for s in self.syllables)


def syllabify(segments: Sequence[MappedSegment]) -> list[Syllable]:
    """Parse *segments* into syllables.

    Raises SyllabificationError carrying the first failing Reason, checked in
    the order EMPTY, NO_VOWEL, VOWEL_HIATUS, CLUSTER_TOO_LONG, EDGE_CLUSTER,
    then codas left to right.
    """
    if not segments:
        raise SyllabificationError(Reason.EMPTY, "empty word")
    graphemes = [s.grapheme for s in segments]
    nuclei = [i for i, g in enumerate(graphemes) if g.is_vowel]
    if not nuclei:
        raise SyllabificationError(Reason.NO_VOWEL, "no vowel")

    # runs[k] = consonants before nucleus k; runs[-1] = consonants after the last
    bounds = [-1, *nuclei, len(graphemes)]
    runs = [b - a - 1 for a, b in zip(bounds, bounds[1:])]
    if 0 in runs[1:-1]:
        pos = nuclei[runs.index(0, 1)]
        raise SyllabificationError(Reason.VOWEL_HIATUS, f"adjacent vowels at {pos - 1}-{pos}")
    if max(runs) >= 3:
        raise SyllabificationError(Reason.CLUSTER_TOO_LONG, "three or more adjacent consonants")
    if runs[0] == 2 or runs[-1] == 2:
        edge = "initial" if runs[0] == 2 else "final"
        raise SyllabificationError(Reason.EDGE_CLUSTER, f"word-{edge} consonant cluster")

    syllables: list[Syllable] = []
    last = len(nuclei) - 1
    for k, pos in enumerate(nuclei):
        onset = graphemes[pos - 1] if runs[k] else None
        coda = None
        if (k == last and runs[k + 1] == 1) or (k < last and runs[k + 1] == 2):
            coda = graphemes[pos + 1]
        if coda is not None and k == last and coda not in WORD_FINAL_GRAPHEMES:
            raise SyllabificationError(Reason.BAD_WORD_FINAL, f"{coda.value!r} cannot end a word")
        if coda is not None and coda not in CODA_GRAPHEMES:
            raise SyllabificationError(Reason.BAD_CODA, f"{coda.value!r} cannot close a syllable")
        syllables.append(Syllable(graphemes[pos], onset=onset, coda=coda, index=k))
    return syllables


def check_vowel_context(
    segments: Sequence[MappedSegment],
    syllables: Sequence[Syllable] | None = None,
) -> bool:
    """True if every lowered vowel has a uvular neighbour or shares a syllable with one."""
    vowel_index = -1
    for i, seg in enumerate(segments):
        if not seg.is_vowel:
            continue
        vowel_index += 1
        if not seg.lowered:
            continue
        neighbours = [*segments[max(i - 1, 0):i], *segments[i + 1:i + 2]]
        if any(is_uvular(n.grapheme) for n in neighbours):
            continue
        if syllables is not None and vowel_index < len(syllables):
            own = syllables[vowel_index]
            if any(m is not None and is_uvular(m) for m in (own.onset, own.coda)):
                continue
        return False
    return True


def _resolve_glide(segments: list[MappedSegment | None], i: int, phone: Phone) -> MappedSegment | None:
    """ɰ is written ll after a vowel and before a uvular, nowhere else."""
    prev = segments[i - 1] if i > 0 else None
    nxt = segments[i + 1] if i + 1 < len(segments) else None
    if prev is not None and prev.is_vowel and nxt is not None and is_uvular(nxt.grapheme):
        return MappedSegment(Grapheme.LL, source=phone)
    return None


def validate_segments(segments: Sequence[MappedSegment]) -> ValidationResult:
    """Syllabify and context-check already mapped segments."""
    try:
        syllables = syllabify(segments)
    except SyllabificationError as exc:
        return ValidationResult(exc.reason, segments=tuple(segments), detail=str(exc))
    if not check_vowel_context(segments, syllables):
        return ValidationResult(
            Reason.BAD_VOWEL_CONTEXT, segments=tuple(segments),
            detail="mid vowel without a neighbouring q, qh or q'",
        )
    return ValidationResult(Reason.OK, syllables=tuple(syllables), segments=tuple(segments))


def validate(phones: Sequence[Phone]) -> ValidationResult:
    """Map, syllabify and context-check a tokenized pronunciation."""
    segments: list[MappedSegment | None] = []
    glides: list[int] = []
    for i, phone in enumerate(phones):
        if phone.base == GLIDE and not (phone.aspirated or phone.ejective):
            segments.append(None)
            glides.append(i)
            continue
        seg = map_phone(phone)
        if seg is None:
            return ValidationResult(Reason.UNMAPPED_PHONE, detail=f"no spelling for [{phone.label}]")
        segments.append(seg)
    for i in glides:
        seg = _resolve_glide(segments, i, phones[i])
        if seg is None:
            return ValidationResult(
                Reason.UNMAPPED_PHONE,
                detail=f"[{GLIDE}] at {i} is not between a vowel and a uvular",
            )
        segments[i] = seg
    return validate_segments(segments)  # type: ignore[arg-type]


def validate_ipa(raw_pron: str, policy: DiacriticPolicy = DiacriticPolicy.REJECT) -> ValidationResult:
    """normalize -> tokenize -> validate, with tokenizer errors folded into the result."""
    try:
        phones = tokenize(normalize(raw_pron), policy)
    except DiacriticPresentError as exc:
        return ValidationResult(Reason.DIACRITIC, detail=str(exc))
    except UnknownSymbolError as exc:
        return ValidationResult(Reason.UNMAPPED_PHONE, detail=str(exc))
    result = validate(phones)
    if not result.eligible:
        log.debug("%s rejected: %s (%s)", raw_pron, result.reason.value, result.detail)
    return result
