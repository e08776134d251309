"""Per-language eligibility report, as TSV or a Markdown table."""

from __future__ import annotations

import logging
from enum import Enum
from pathlib import Path
from typing import Iterable

from chaskiq.constants import (
    REPORT_MARKDOWN,
    REPORT_MD_HEADER,
    REPORT_TOTAL_LABEL,
    REPORT_TSV,
    REPORT_TSV_HEADER,
)
from chaskiq.errors import FileUnwritableError
from chaskiq.mining.records import LanguageStats
from chaskiq.output.formatter import format_percent, markdown_line, tsv_line

log = logging.getLogger(__name__)


class ReportFormat(Enum):
    TSV = REPORT_TSV
    MARKDOWN = REPORT_MARKDOWN


def sort_stats(stats: Iterable[LanguageStats]) -> list[LanguageStats]:
    """Most eligible words first, ties by language code."""
    return sorted(stats, key=lambda s: (-s.eligible, s.language))


def total_stats(stats: Iterable[LanguageStats]) -> LanguageStats:
    total = LanguageStats(REPORT_TOTAL_LABEL)
    for row in stats:
        total = total.merge(row, language=REPORT_TOTAL_LABEL)
    return total


def _cells(row: LanguageStats) -> tuple[object, ...]:
    return (
        row.language, row.total, row.eligible, row.translated,
        format_percent(row.eligible, row.total),
        format_percent(row.translated, row.eligible),
    )


def render_report(stats: Iterable[LanguageStats], fmt: ReportFormat | str = ReportFormat.TSV) -> str:
    """One row per language plus a TOTAL row."""
    fmt = ReportFormat(fmt)
    rows = sort_stats(stats)
    total = total_stats(rows)
    if fmt is ReportFormat.TSV:
        lines = [tsv_line(REPORT_TSV_HEADER)]
        lines += [tsv_line(_cells(row)) for row in rows]
        lines.append(tsv_line(_cells(total)))
        return "".join(lines)

    # Counts and ratios right-aligned
    lines = [
        markdown_line(REPORT_MD_HEADER),
        markdown_line([":---"] + ["---:"] * (len(REPORT_MD_HEADER) - 1)),
    ]
    lines += [markdown_line(_cells(row)) for row in rows]
    total_cells = list(_cells(total))
    total_cells[0] = f"**{REPORT_TOTAL_LABEL}**"
    lines.append(markdown_line(total_cells))
    return "".join(lines)


def write_report(stats: Iterable[LanguageStats], path: str | Path, fmt: ReportFormat | str = ReportFormat.TSV) -> Path:
    path = Path(path)
    text = render_report(stats, fmt)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    except OSError as exc:
        raise FileUnwritableError(f"cannot write report {path}: {exc}") from exc
    log.info("Report written: %s", path)
    return path
