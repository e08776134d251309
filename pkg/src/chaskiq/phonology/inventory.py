"""Official Quechua alphabet and the IPA -> grapheme mapping table.

Mid vowels [e ɛ o ɔ] have no grapheme of their own: they are allophones of
/i/ and /u/ next to uvular consonants and are written i/u with the segment
flagged as ``lowered`` so phonotactics can check the context.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from chaskiq.ipa.tokenizer import AFFRICATE, ASPIRATION, EJECTIVE, GLIDE, Phone


class GraphemeClass(Enum):
    VOWEL = "vowel"
    CONSONANT = "consonant"


class Grapheme(Enum):
    """The 28 official spellings, in alphabet order."""

    A = "a"
    I = "i"
    U = "u"
    CH = "ch"
    CHH = "chh"
    CH_EJECTIVE = "ch'"
    H = "h"
    K = "k"
    KH = "kh"
    K_EJECTIVE = "k'"
    L = "l"
    LL = "ll"
    M = "m"
    N = "n"
    NY = "ñ"
    P = "p"
    PH = "ph"
    P_EJECTIVE = "p'"
    Q = "q"
    QH = "qh"
    Q_EJECTIVE = "q'"
    R = "r"
    S = "s"
    T = "t"
    TH = "th"
    T_EJECTIVE = "t'"
    W = "w"
    Y = "y"

    @property
    def grapheme_class(self) -> GraphemeClass:
        if self in VOWELS:
            return GraphemeClass.VOWEL
        return GraphemeClass.CONSONANT

    @property
    def is_vowel(self) -> bool:
        return self in VOWELS


VOWELS = frozenset({Grapheme.A, Grapheme.I, Grapheme.U})
UVULARS = frozenset({Grapheme.Q, Grapheme.QH, Grapheme.Q_EJECTIVE})


@dataclass(frozen=True)
class MappedSegment:
    """A phone resolved to its grapheme."""

    grapheme: Grapheme
    lowered: bool = False
    source: Phone | None = None

    def __post_init__(self) -> None:
        if self.lowered and self.grapheme not in (Grapheme.I, Grapheme.U):
            raise ValueError(f"only i/u can be lowered, got {self.grapheme.value!r}")

    @property
    def is_vowel(self) -> bool:
        return self.grapheme.is_vowel


# Plain (unmodified) bases. The first base listed for a grapheme is its
# canonical IPA.
_PLAIN: dict[str, Grapheme] = {
    "a": Grapheme.A, "ɑ": Grapheme.A,
    "i": Grapheme.I, "ɪ": Grapheme.I,
    "u": Grapheme.U, "ʊ": Grapheme.U,
    AFFRICATE: Grapheme.CH, "ʃ": Grapheme.CH,
    "h": Grapheme.H,
    "k": Grapheme.K, "x": Grapheme.K,
    "l": Grapheme.L,
    "ʎ": Grapheme.LL,
    "m": Grapheme.M,
    "n": Grapheme.N,
    "ɲ": Grapheme.NY,
    "p": Grapheme.P, "β": Grapheme.P, "ɸ": Grapheme.P,
    "q": Grapheme.Q, "ɢ": Grapheme.Q, "χ": Grapheme.Q,
    "r": Grapheme.R,
    "s": Grapheme.S,
    "t": Grapheme.T,
    "w": Grapheme.W,
    "j": Grapheme.Y,
}
# Mid vowels, written with the high vowel of the same backness
_LOWERED: dict[str, Grapheme] = {
    "e": Grapheme.I, "ɛ": Grapheme.I,
    "o": Grapheme.U, "ɔ": Grapheme.U,
}
_ASPIRATED: dict[str, Grapheme] = {
    AFFRICATE: Grapheme.CHH, "k": Grapheme.KH, "p": Grapheme.PH,
    "q": Grapheme.QH, "t": Grapheme.TH,
}
_EJECTIVES: dict[str, Grapheme] = {
    AFFRICATE: Grapheme.CH_EJECTIVE, "k": Grapheme.K_EJECTIVE,
    "p": Grapheme.P_EJECTIVE, "q": Grapheme.Q_EJECTIVE, "t": Grapheme.T_EJECTIVE,
}


def map_phone(phone: Phone) -> MappedSegment | None:
    """Return the grapheme for *phone*, or None when it has no spelling.

    ɰ is always None here; its spelling depends on position.
    """
    if phone.aspirated:
        grapheme = _ASPIRATED.get(phone.base)
    elif phone.ejective:
        grapheme = _EJECTIVES.get(phone.base)
    elif phone.base in _LOWERED:
        return MappedSegment(_LOWERED[phone.base], lowered=True, source=phone)
    else:
        grapheme = _PLAIN.get(phone.base)
    if grapheme is None:
        return None
    return MappedSegment(grapheme, source=phone)


def is_uvular(grapheme: Grapheme) -> bool:
    return grapheme in UVULARS


def canonical_ipa(grapheme: Grapheme) -> str:
    """Preferred IPA for *grapheme*, e.g. ``qʰ`` for qh."""
    for table, mark in ((_ASPIRATED, ASPIRATION), (_EJECTIVES, EJECTIVE)):
        for base, target in table.items():
            if target is grapheme:
                return base + mark
    return next(base for base, target in _PLAIN.items() if target is grapheme)


def inventory_rows() -> list[tuple[str, str]]:
    """(IPA, spelling) rows of the full mapping table, in alphabet order."""
    rows: list[tuple[str, str]] = []
    for grapheme in Grapheme:
        rows.extend((base, grapheme.value) for base, g in _PLAIN.items() if g is grapheme)
        rows.extend(
            (base, f"{grapheme.value} (near uvular consonants)")
            for base, g in _LOWERED.items() if g is grapheme
        )
        rows.extend((base + ASPIRATION, grapheme.value) for base, g in _ASPIRATED.items() if g is grapheme)
        rows.extend((base + EJECTIVE, grapheme.value) for base, g in _EJECTIVES.items() if g is grapheme)
        if grapheme is Grapheme.LL:
            rows.append((GLIDE, "ll (syllable-final before q, qh, q')"))
    return rows
