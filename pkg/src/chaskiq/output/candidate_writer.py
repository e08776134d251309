"""Write the candidate database as TSV."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Iterable

from chaskiq.constants import CANDIDATE_HEADER
from chaskiq.errors import FileUnwritableError
from chaskiq.mining.records import Candidate
from chaskiq.output.formatter import tsv_line

log = logging.getLogger(__name__)


def write_candidates(candidates: Iterable[Candidate], path: str | Path) -> Path:
    """Write *candidates* sorted by (language, headword, ipa) with a header line.

    Raises:
        FileUnwritableError: the file cannot be created or written.
    """
    path = Path(path)
    rows = sorted(candidates, key=Candidate.sort_key)
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(tsv_line(CANDIDATE_HEADER))
            for candidate in rows:
                f.write(tsv_line(candidate.to_row()))
    except OSError as exc:
        raise FileUnwritableError(f"cannot write candidates to {path}: {exc}") from exc
    log.info("Wrote %d candidates to %s", len(rows), path)
    return path
