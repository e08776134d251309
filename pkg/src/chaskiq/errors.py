"""Exception hierarchy shared across the package."""

from __future__ import annotations


class ChaskiqError(Exception):
    """Base class for all errors raised by chaskiq."""


class ConfigError(ChaskiqError):
    """A configuration value is out of range or unknown."""


class TokenizeError(ChaskiqError):
    """A pronunciation could not be split into recognized phones."""

    def __init__(self, position: int, symbol: str, message: str) -> None:
        super().__init__(message)
        self.position = position
        self.symbol = symbol


class UnknownSymbolError(TokenizeError):
    """A character sequence matches no symbol of the inventory."""

    def __init__(self, position: int, symbol: str) -> None:
        super().__init__(
            position, symbol,
            f"unknown symbol {symbol!r} (U+{ord(symbol[0]):04X}) at position {position}",
        )


class DiacriticPresentError(TokenizeError):
    """A diacritic, tone or length mark was found under the reject policy."""

    def __init__(self, position: int, symbol: str) -> None:
        super().__init__(
            position, symbol,
            f"diacritic U+{ord(symbol[0]):04X} at position {position}",
        )


class IneligibleInputError(ChaskiqError):
    """Transcription was requested for a word that failed validation."""


class SpellingError(ChaskiqError):
    """Text contains characters outside the official Quechua spellings."""


class MalformedLineError(ChaskiqError):
    """A dictionary or index line has the wrong number of fields or an empty one."""


class FileUnreadableError(ChaskiqError):
    """An input file is missing, unreadable or not valid UTF-8."""


class FileUnwritableError(ChaskiqError):
    """An output file could not be written."""


class UnknownCodeError(ChaskiqError):
    """A language code is absent from the correspondence table."""


class LanguageMapError(ChaskiqError):
    """The language correspondence table is not a well-formed injective map."""


class ScanError(ChaskiqError):
    """A scan worker failed while validating a batch."""
