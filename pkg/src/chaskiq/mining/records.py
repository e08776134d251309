"""Records produced by a scan."""

from __future__ import annotations

from dataclasses import dataclass

from chaskiq.constants import GLOSS_SEPARATOR, SYLLABLE_SEPARATOR


@dataclass(frozen=True)
class Candidate:
    """A foreign word that can be written and pronounced as Quechua."""

    language: str
    headword: str
    ipa: str              # accepted variant, normalized
    spelling: str
    syllabification: str
    glosses: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.syllabification.replace(SYLLABLE_SEPARATOR, "") != self.spelling:
            raise ValueError(
                f"syllabification {self.syllabification!r} does not spell {self.spelling!r}"
            )

    @property
    def translated(self) -> bool:
        return bool(self.glosses)

    def sort_key(self) -> tuple[str, str, str]:
        return (self.language, self.headword, self.ipa)

    def to_row(self) -> tuple[str, ...]:
        return (
            self.language, self.headword, self.ipa, self.spelling,
            self.syllabification, GLOSS_SEPARATOR.join(self.glosses),
        )


@dataclass(frozen=True)
class LanguageStats:
    """Word counts for one language: examined, eligible, eligible with a gloss."""

    language: str
    total: int = 0
    eligible: int = 0
    translated: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.translated <= self.eligible <= self.total:
            raise ValueError(
                f"{self.language}: need 0 <= translated <= eligible <= total, "
                f"got {self.translated}/{self.eligible}/{self.total}"
            )

    def merge(self, other: LanguageStats, language: str | None = None) -> LanguageStats:
        """Sum of both counts, labelled *language* (default: this row's)."""
        return LanguageStats(
            language or self.language,
            self.total + other.total,
            self.eligible + other.eligible,
            self.translated + other.translated,
        )
