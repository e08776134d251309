"""Tests for the scan pipeline, the report and the candidate file.

Report arithmetic is checked to the digit against the published per-language
counts for both source collections (tests/fixtures/table_*.tsv).

    python tests/test_pipeline_report.py
"""
import tempfile
import time
from pathlib import Path

from harness import FIXTURES, check, raises, run_all

from chaskiq.constants import CANDIDATE_HEADER, WORKER_POLL_S
from chaskiq.errors import FileUnwritableError, ScanError
from chaskiq.ipa.tokenizer import DiacriticPolicy
from chaskiq.lexicon.gloss import load_gloss_index
from chaskiq.lexicon.langcodes import load_language_map
from chaskiq.lexicon.reader import DictEntry, read_dictionary
from chaskiq.mining.pipeline import evaluate_word, group_entries, scan
from chaskiq.mining.records import Candidate, LanguageStats
from chaskiq.output.candidate_writer import write_candidates
from chaskiq.output.formatter import format_percent
from chaskiq.output.report_writer import ReportFormat, render_report, write_report
from chaskiq.phonology.phonotactics import Reason, validate_ipa
from chaskiq.phonology.transcriber import validate_spelling

OUT = Path(tempfile.mkdtemp(prefix="chaskiq_test_"))


def load_table(name):
    """Return ([(stats, pct, pct)], (total stats, pct, pct)) from a count table."""
    rows, total = [], None
    for line in (FIXTURES / name).read_text(encoding="utf-8").splitlines():
        if line.startswith("#"):
            continue
        label, count, eligible, translated, pct_eligible, pct_translated = line.split("\t")
        row = (LanguageStats(label, int(count), int(eligible), int(translated)), pct_eligible, pct_translated)
        if label == "TOTAL":
            total = row
        else:
            rows.append(row)
    return rows, total


def parse_tsv_report(text):
    lines = text.splitlines()
    return lines[0].split("\t"), [line.split("\t") for line in lines[1:]]


def fixture_entries(*names, fmt="open-dict"):
    code_map = load_language_map()
    entries = []
    for name in names:
        entries.extend(read_dictionary(FIXTURES / name, fmt, code_map=code_map))
    return entries


def test_format_percent():
    check(format_percent(14970, 3838348) == "0.39%", "14970/3838348 -> 0.39%")
    check(format_percent(1768, 14970) == "11.81%", "1768/14970 -> 11.81%")
    check(format_percent(2544, 48308) == "5.27%", "Swahili 5.27%")
    check(format_percent(740, 1969) == "37.58%", "French 37.58%")
    check(format_percent(0, 0) == "0.00%", "zero denominator -> 0.00%")
    check(format_percent(1, 8) == "12.50%", "exact value keeps two decimals")
    check(format_percent(1, 800) == "0.13%", "0.125 rounds half up")
    check(format_percent(5, 5) == "100.00%", "100%")


def _check_table(name):
    rows, (total, total_eligible, total_translated) = load_table(name)
    header, lines = parse_tsv_report(render_report([r for r, _, _ in rows]))
    rendered = {line[0]: line for line in lines}
    mismatches = [
        stats.language for stats, pct_eligible, pct_translated in rows
        if rendered[stats.language][4:] != [pct_eligible, pct_translated]
    ]
    check(not mismatches, f"{name}: every published percentage reproduced ({mismatches})")
    want = ["TOTAL", str(total.total), str(total.eligible), str(total.translated), total_eligible, total_translated]
    check(lines[-1] == want, f"{name}: TOTAL row {lines[-1]}")
    eligible = [int(line[2]) for line in lines[:-1]]
    check(eligible == sorted(eligible, reverse=True), f"{name}: rows sorted by eligible, descending")


def test_open_dict_table():
    _check_table("table_open_dict.tsv")


def test_wikipron_table():
    _check_table("table_wikipron.tsv")


def test_report_layout():
    stats = [LanguageStats("swa", 48308, 2544, 0), LanguageStats("fra", 245178, 1969, 740),
             LanguageStats("ara", 857161, 23, 0), LanguageStats("deu", 100, 23, 0)]
    header, lines = parse_tsv_report(render_report(stats, ReportFormat.TSV))
    check(header[0] == "language" and len(header) == 6, "TSV header")
    check([line[0] for line in lines] == ["swa", "fra", "ara", "deu", "TOTAL"], "ties broken by language code")
    check(lines[0][4:] == ["5.27%", "0.00%"], "Swahili row")
    check(lines[1][4:] == ["0.80%", "37.58%"], "French row")

    md = render_report(stats, "md").splitlines()
    check(md[0].startswith("| Language | Words Total"), "Markdown header")
    check(md[1] == "| :--- | ---: | ---: | ---: | ---: | ---: |", "Markdown alignment row")
    check(md[-1].startswith("| **TOTAL** | "), "bold TOTAL row")

    empty = parse_tsv_report(render_report([]))[1]
    check(empty == [["TOTAL", "0", "0", "0", "0.00%", "0.00%"]], "empty report -> zero TOTAL row")

    path = write_report(stats, OUT / "report.md", ReportFormat.MARKDOWN)
    check(path.read_text(encoding="utf-8") == render_report(stats, "md"), "write_report writes render_report")


def test_language_stats():
    check(raises(ValueError, LanguageStats, "spa", 1, 2, 0) is not None, "eligible > total refused")
    check(raises(ValueError, LanguageStats, "spa", 5, 2, 3) is not None, "translated > eligible refused")
    merged = LanguageStats("spa", 3, 2, 1).merge(LanguageStats("spa", 4, 1, 0))
    check(merged == LanguageStats("spa", 7, 3, 1), "merge sums counts")


def test_evaluate_word():
    candidate, reason = evaluate_word("spa", "pampa", ["/ˈpampa/"])
    check(reason is Reason.OK and candidate.spelling == "pampa", "pampa -> candidate")
    check(candidate.syllabification == "pam.pa" and candidate.ipa == "pampa", "normalized ipa, pam.pa")
    candidate, reason = evaluate_word("spa", "mesa", ["/ˈmesa/"])
    check(candidate is None and reason is Reason.BAD_VOWEL_CONTEXT, "mesa -> no candidate")
    candidate, _ = evaluate_word("spa", "x", ["/ˈmesa/", "/ˈpampa/", "/ˈkasa/"])
    check(candidate.ipa == "pampa", "first passing variant wins")
    _, reason = evaluate_word("spa", "x", ["/ˈɡato/", "/ˈmesa/"])
    check(reason is Reason.UNMAPPED_PHONE, "rejection reason from the first variant")


def test_scan_counts():
    index = load_gloss_index(FIXTURES / "gloss_index.tsv")
    result = scan(fixture_entries("es_MX.txt", "sw.txt"), index=index)
    check(result.stats["spa"] == LanguageStats("spa", 16, 9, 3), f"spa counts {result.stats['spa']}")
    check(result.stats["swa"] == LanguageStats("swa", 8, 5, 1), f"swa counts {result.stats['swa']}")
    spellings = {c.spelling for c in result.candidates if c.language == "spa"}
    check({"pampa", "llama", "palta"} <= spellings and "mesa" not in spellings, "expected spellings")
    pampa = next(c for c in result.candidates if c.headword == "pampa")
    check(pampa.glosses == ("plain", "prairie", "grassland"), "glosses attached")
    check(result.rejections["spa"][Reason.BAD_VOWEL_CONTEXT] == 3, "rejection reasons counted")
    check(sum(result.rejections["spa"].values()) == 16 - 9, "every rejected word has a reason")

    for language, stats in result.stats.items():
        rows = [c for c in result.candidates if c.language == language]
        check(stats.eligible == len(rows), f"{language}: eligible = candidate rows")
    for c in result.candidates:
        again = validate_ipa(c.ipa)
        check(again.eligible and again.syllabification == c.syllabification, f"{c.headword}: ipa re-validates")
        check(validate_spelling(c.spelling).eligible, f"{c.headword}: spelling re-validates")


def test_tonal_zero_row():
    entries = fixture_entries("cmn_hani_broad.tsv", fmt="wikipron")
    result = scan(entries)
    check(result.stats["cmn"] == LanguageStats("cmn", 10, 0, 0), "10 tonal words, none eligible")
    check(dict(result.rejections["cmn"]) == {Reason.DIACRITIC: 10}, "all rejected for their tones")
    rows = parse_tsv_report(render_report(result.stats.values()))[1]
    check(rows[0] == ["cmn", "10", "0", "0", "0.00%", "0.00%"], "0.00% report row")

    stripped = scan(entries, DiacriticPolicy.STRIP)
    check(stripped.stats["cmn"].eligible == 9, "stripping tones admits all but ʂa")


def test_word_grouping():
    entries = [
        DictEntry("casa", "spa", ("/ˈkaza/",)),
        DictEntry("casa", "spa", ("/ˈkasa/",)),
        DictEntry("casa", "por", ("/ˈkazɐ/",)),
    ]
    words = group_entries(entries)
    check(words[0] == ("spa", "casa", ("/ˈkaza/", "/ˈkasa/")), "variants of one word merged in order")
    result = scan(entries)
    check(result.stats["spa"] == LanguageStats("spa", 1, 1, 0), "word counted once across entries")
    check(result.stats["por"].total == 1, "languages kept apart")


def test_worker_determinism():
    entries = fixture_entries("es_MX.txt", "sw.txt")
    index = load_gloss_index(FIXTURES / "gloss_index.tsv")
    outputs = []
    for workers, batch_size in [(1, 2000), (8, 2)]:
        result = scan(entries, index=index, workers=workers, batch_size=batch_size)
        cand = write_candidates(result.candidates, OUT / f"cand_{workers}.tsv").read_bytes()
        report = write_report(result.stats.values(), OUT / f"report_{workers}.tsv").read_bytes()
        outputs.append((cand, report))
    check(outputs[0] == outputs[1], "1 and 8 workers give byte-identical files")


def test_small_scan_does_not_wait_on_idle_workers():
    entries = [DictEntry("pampa", "spa", ("/ˈpampa/",)), DictEntry("kaka", "swa", ("/ˈkaka/",))]
    t0 = time.perf_counter()
    result = scan(entries, workers=4, batch_size=1)
    elapsed = time.perf_counter() - t0
    check(len(result.candidates) == 2, "both words scanned")
    check(elapsed < WORKER_POLL_S / 2, f"finished in {elapsed:.3f}s, no idle poll wait")


def test_worker_failure():
    class BrokenIndex:
        def lookup(self, language, headword):
            raise RuntimeError("index went away")

    entries = [DictEntry("pampa", "spa", ("/ˈpampa/",))]
    exc = raises(ScanError, scan, entries, index=BrokenIndex(), workers=2)
    check(exc is not None and isinstance(exc.__cause__, RuntimeError), "worker error -> ScanError")
    check(raises(ValueError, scan, entries, workers=0) is not None, "workers must be positive")


def test_write_candidates():
    path = write_candidates([], OUT / "empty.tsv")
    check(path.read_text(encoding="utf-8") == "\t".join(CANDIDATE_HEADER) + "\n", "empty -> header only")

    b = Candidate("spa", "pampa", "pampa", "pampa", "pam.pa", ("plain", "prairie"))
    a = Candidate("eng", "papa", "papa", "papa", "pa.pa")
    path = write_candidates([b], OUT / "one.tsv")
    lines = path.read_text(encoding="utf-8").split("\n")
    check(len(lines) == 3 and lines[2] == "", "1 candidate -> 2 lines")
    check(lines[1] == "spa\tpampa\tpampa\tpampa\tpam.pa\tplain;prairie", "glosses ';'-joined")

    lines = write_candidates([b, a], OUT / "two.tsv").read_text(encoding="utf-8").splitlines()
    check([line.split("\t")[0] for line in lines[1:]] == ["eng", "spa"], "rows sorted")
    check(raises(FileUnwritableError, write_candidates, [a], OUT) is not None, "directory path -> FileUnwritable")
    check(raises(ValueError, Candidate, "spa", "x", "pa", "pa", "ka") is not None,
          "syllabification must spell the word")


if __name__ == "__main__":
    run_all(globals())
