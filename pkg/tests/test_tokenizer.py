"""Tests for IPA normalization and tokenization.

    python tests/test_tokenizer.py
"""
from harness import check, raises, run_all

from chaskiq.errors import DiacriticPresentError, TokenizeError, UnknownSymbolError
from chaskiq.ipa.normalizer import normalize
from chaskiq.ipa.tokenizer import (
    DiacriticPolicy,
    Phone,
    apply_policy,
    is_diacritic,
    tokenize,
)

STRIP = DiacriticPolicy.STRIP

SAMPLES = [
    "pampa", "tʃunka", "t͡ʃʼaska", "pʰataj", "qʼɛsa", "t'anta", "ʧaka",
    "aɰqo", "tʃiːsa", "ma˨˩", "kʰujaj", "pɸa",
]


def bases(phones):
    return [p.label for p in phones]


def test_normalize():
    check(normalize("/ˈpam.pa/") == "pampa", "delimiters, stress and dots removed")
    check(normalize("tʃ u n k a") == "tʃunka", "WikiPron segment spaces removed")
    check(normalize("") == "", "empty stays empty")
    check(normalize("  [ˌta.ˈpa]  ") == "tapa", "brackets and secondary stress removed")
    check(normalize("t͡ʃa") == "t͡ʃa", "tie bar preserved")
    check(normalize("māma") == "ma\N{COMBINING MACRON}ma", "precomposed letters decomposed")


def test_examples():
    phones = tokenize(normalize("t͡ʃʼaska"))
    check(bases(phones) == ["tʃʼ", "a", "s", "k", "a"], f"t͡ʃʼaska -> {bases(phones)}")
    check(phones[0].ejective and not phones[0].aspirated, "ch' is ejective")

    phones = tokenize(normalize("pʰataj"))
    check(bases(phones) == ["pʰ", "a", "t", "a", "j"], f"pʰataj -> {bases(phones)}")

    exc = raises(DiacriticPresentError, tokenize, normalize("māma"))
    check(exc is not None and exc.position == 2, "māma under REJECT -> DiacriticPresent at 2")

    exc = raises(UnknownSymbolError, tokenize, normalize("dʒas"))
    check(exc is not None and exc.position == 0, "dʒas -> UnknownSymbol at 0")
    check(exc is not None and "U+0064" in str(exc), "message names the code point")

    check(tokenize("") == [], "empty input -> no phones")


def test_affricates_unify():
    forms = ["t͡ʃa", "t͜ʃa", "tʃa", "ʧa", normalize("ča")]
    results = {tuple(bases(tokenize(f))) for f in forms}
    check(results == {("tʃ", "a")}, f"all affricate spellings agree: {results}")
    check(len(tokenize("tʃa")) == 2, "tʃ is one phone, not t + ʃ")


def test_notation_variants():
    check(bases(tokenize(normalize("šaka"))) == ["ʃ", "a", "k", "a"], "š -> ʃ")
    check(bases(tokenize(normalize("k\N{COMBINING MACRON}a"))) == ["k", "a"], "k̄ -> k")
    check(bases(tokenize("φa")) == ["ɸ", "a"], "Greek φ -> ɸ")
    check(bases(tokenize("pɸa")) == ["pʰ", "a"], "pɸ -> aspirated p")
    check(bases(tokenize("pφa")) == ["pʰ", "a"], "pφ -> aspirated p")
    check(bases(tokenize(normalize("š"), STRIP)) == ["ʃ"], "š survives STRIP")


def test_modifiers():
    check(bases(tokenize("t'a")) == ["tʼ", "a"], "ASCII apostrophe after a stop is ejective")
    check(bases(tokenize("tʃ'a")) == ["tʃʼ", "a"], "ASCII apostrophe after an affricate")
    check(raises(UnknownSymbolError, tokenize, "s'a") is not None, "ASCII apostrophe after s is unknown")
    exc = raises(UnknownSymbolError, tokenize, "ʰa")
    check(exc is not None and exc.position == 0, "leading modifier is unknown")
    check(raises(UnknownSymbolError, tokenize, "kʰʼa") is not None, "double laryngeal modifier is unknown")
    check(raises(ValueError, Phone, "k", True, True) is not None, "aspirated + ejective phone refused")
    check(raises(ValueError, Phone, "g") is not None, "base outside the inventory refused")


def test_tie_bar_outside_affricate():
    exc = raises(UnknownSymbolError, tokenize, normalize("t͡sa"))
    check(exc is not None and exc.position == 1, "stray tie bar -> UnknownSymbol at the tie bar")
    check(raises(UnknownSymbolError, tokenize, normalize("t͡sa"), STRIP) is not None,
          "tie bar is not stripped either")


def test_diacritic_classes():
    for ch, name in [("ː", "length"), ("˥", "tone letter"), ("\N{COMBINING TILDE}", "combining tilde"),
                     ("ʲ", "palatalization"), ("²", "tone digit"), ("˞", "rhoticity")]:
        check(is_diacritic(ch), f"{name} is a diacritic")
    for ch, name in [("\N{COMBINING DOUBLE INVERTED BREVE}", "tie bar"), ("ʰ", "aspiration"),
                     ("ʼ", "ejective"), ("a", "vowel"), ("'", "apostrophe")]:
        check(not is_diacritic(ch), f"{name} is not a diacritic")


def test_strip_policy():
    phones = tokenize(normalize("tʃiːsa"), STRIP)
    check(bases(phones) == ["tʃ", "i", "s", "a"], "length mark stripped")
    phones = tokenize(normalize("ma˨˩"), STRIP)
    check(bases(phones) == ["m", "a"], "tone letters stripped")
    exc = raises(UnknownSymbolError, tokenize, normalize("maːg"), STRIP)
    check(exc is not None and exc.position == 3, "positions still index the normalized input")
    check(apply_policy(normalize("tʃiːsa"), STRIP) == "tʃisa", "apply_policy deletes diacritics")


def test_reconstruction():
    for raw in SAMPLES:
        text = normalize(raw)
        for policy in DiacriticPolicy:
            try:
                phones = tokenize(text, policy)
            except TokenizeError:
                continue
            joined = "".join(p.raw for p in phones)
            check(joined == apply_policy(text, policy), f"{raw} [{policy.value}] raw pieces rebuild input")


def test_policy_monotonicity():
    for raw in SAMPLES:
        text = normalize(raw)
        try:
            strict = tokenize(text)
        except TokenizeError:
            continue
        check(tokenize(text, STRIP) == strict, f"{raw}: REJECT-accepted tokens identical under STRIP")
        check(tokenize(text) == strict, f"{raw}: deterministic")


def test_error_hierarchy():
    exc = raises(TokenizeError, tokenize, "ŋa")
    check(isinstance(exc, UnknownSymbolError) and exc.symbol == "ŋ", "UnknownSymbolError is a TokenizeError with the symbol")


if __name__ == "__main__":
    run_all(globals())
