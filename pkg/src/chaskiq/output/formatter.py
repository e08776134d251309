"""Percentages and table rows for reports."""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable

_CENT = Decimal("0.01")


def format_percent(numerator: int, denominator: int) -> str:
    """``numerator / denominator`` as a percentage with two decimals, half rounded up.

    ``format_percent(14970, 3838348)`` -> ``"0.39%"``; a zero denominator gives ``"0.00%"``.
    """
    if denominator == 0:
        return "0.00%"
    value = (Decimal(numerator) * 100 / Decimal(denominator)).quantize(_CENT, rounding=ROUND_HALF_UP)
    return f"{value}%"


def tsv_line(fields: Iterable[object]) -> str:
    return "\t".join(str(f) for f in fields) + "\n"


def markdown_line(cells: Iterable[object]) -> str:
    return "| " + " | ".join(str(c) for c in cells) + " |\n"
