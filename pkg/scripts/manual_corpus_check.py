"""Manual corpus check: REQUIRES the real ipa-dict Swahili file (~48k words).

    python scripts/manual_corpus_check.py path/to/sw.txt

Download sw.txt from the open-dict-data/ipa-dict repository (data/sw.txt).
Not part of the test suite: it depends on a large upstream file that changes
between releases.

Covers: full-file read (entries + skipped == non-empty lines), a scan with
the default reject policy, the Swahili eligible share landing within 1.5
points of 5.27%, identical results with 1 and 4 workers, and a re-validation
of every candidate's IPA and spelling.
"""
import sys
import tempfile
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from chaskiq.lexicon.langcodes import load_language_map
from chaskiq.lexicon.reader import DictFormat, read_dictionary
from chaskiq.mining.pipeline import scan
from chaskiq.output.candidate_writer import write_candidates
from chaskiq.output.report_writer import render_report
from chaskiq.phonology.phonotactics import validate_ipa
from chaskiq.phonology.transcriber import validate_spelling

PUBLISHED_PCT = 5.27
TOLERANCE_PTS = 1.5

OUT = Path(tempfile.mkdtemp(prefix="chaskiq_corpus_"))

FAILURES = []


def check(cond, msg):
    tag = "PASS" if cond else "FAIL"
    print(f"  [{tag}] {msg}", flush=True)
    if not cond:
        FAILURES.append(msg)


if len(sys.argv) != 2:
    print(__doc__)
    sys.exit(2)
source = Path(sys.argv[1])

# ---------------------------------------------------------------
print("== Read ==", flush=True)
stream = read_dictionary(source, DictFormat.OPEN_DICT, code_map=load_language_map())
entries = list(stream)
stats = stream.stats
check(stream.language == "swa", f"label {source.stem} -> {stream.language}")
check(stats.entries + stats.skipped == stats.lines,
      f"{stats.entries} entries + {stats.skipped} skipped == {stats.lines} lines")

# ---------------------------------------------------------------
print("== Scan ==", flush=True)
t0 = time.perf_counter()
result = scan(entries)
print(f"  scanned in {time.perf_counter() - t0:.1f}s", flush=True)
row = result.stats["swa"]
pct = 100 * row.eligible / row.total if row.total else 0.0
print(render_report(result.stats.values()), end="")
check(abs(pct - PUBLISHED_PCT) <= TOLERANCE_PTS,
      f"eligible share {pct:.2f}% within {TOLERANCE_PTS} points of {PUBLISHED_PCT}%")
for reason, count in result.rejections["swa"].most_common():
    print(f"  {reason.value:<18} {count}")

# ---------------------------------------------------------------
print("== Worker pool ==", flush=True)
pooled = scan(entries, workers=4, batch_size=500)
a = write_candidates(result.candidates, OUT / "one.tsv").read_bytes()
b = write_candidates(pooled.candidates, OUT / "four.tsv").read_bytes()
check(a == b and pooled.stats == result.stats, "1 and 4 workers agree")

# ---------------------------------------------------------------
print("== Candidate self-check ==", flush=True)
bad = [
    c.headword for c in result.candidates
    if validate_ipa(c.ipa).syllabification != c.syllabification
    or not validate_spelling(c.spelling).eligible
]
check(not bad, f"{len(result.candidates)} candidates re-validate ({bad[:5]})")

print()
if FAILURES:
    print(f"{len(FAILURES)} FAILURE(S):")
    for f in FAILURES:
        print(" -", f)
    sys.exit(1)
print("ALL CHECKS PASSED")
