"""Command-line interface: ``chaskiq <command> ...``.

Data goes to files or stdout; progress and warnings go to the log (stderr).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict
from pathlib import Path

from chaskiq import __version__
from chaskiq.config import ConfigManager, MinerConfig
from chaskiq.constants import (
    APP_NAME,
    APP_VERSION,
    EXIT_IO,
    EXIT_OK,
    EXIT_USAGE,
    FORMAT_OPEN_DICT,
    FORMAT_WIKIPRON,
    LANG_AUTO,
    REPORT_MARKDOWN,
    REPORT_TSV,
)
from chaskiq.errors import (
    ChaskiqError,
    ConfigError,
    FileUnreadableError,
    FileUnwritableError,
    LanguageMapError,
    ScanError,
    UnknownCodeError,
)
from chaskiq.ipa.tokenizer import DiacriticPolicy
from chaskiq.lexicon.gloss import build_wordnet_index, load_gloss_index
from chaskiq.lexicon.langcodes import load_language_map, relabel_language
from chaskiq.lexicon.reader import DictEntry, read_dictionary
from chaskiq.mining.pipeline import scan
from chaskiq.output.candidate_writer import write_candidates
from chaskiq.output.formatter import markdown_line, tsv_line
from chaskiq.output.report_writer import render_report, write_report
from chaskiq.phonology.inventory import inventory_rows
from chaskiq.phonology.phonotactics import validate_ipa
from chaskiq.phonology.transcriber import transcribe
from chaskiq.utils.logging_setup import setup_logging

log = logging.getLogger(__name__)

_POLICIES = [p.value for p in DiacriticPolicy]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=APP_NAME.lower(),
        description="Find foreign words that can be written and pronounced as Quechua.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", type=Path, help="config file (default: per-user config.json)")
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug detail")
    parser.add_argument("-q", "--quiet", action="store_true", help="log warnings and errors only")
    parser.add_argument("--log-file", type=Path, help="also log to this file")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("scan", help="scan dictionary files for candidates")
    p.add_argument("files", nargs="+", type=Path, metavar="FILE")
    p.add_argument("--format", required=True, choices=[FORMAT_OPEN_DICT, FORMAT_WIKIPRON], dest="fmt")
    p.add_argument("--lang", default=LANG_AUTO,
                   help="language code for every file, or 'auto' to take it from the file name")
    p.add_argument("--diacritics", choices=_POLICIES, help="reject or strip diacritics")
    p.add_argument("--gloss", type=Path, help="gloss index file")
    p.add_argument("--out", required=True, type=Path, help="candidate TSV to write")
    p.add_argument("--report", choices=[REPORT_TSV, REPORT_MARKDOWN], help="report format")
    p.add_argument("--report-out", type=Path, help="write the report here instead of stdout")
    p.add_argument("--workers", type=int, help="validation threads")
    p.add_argument("--batch-size", type=int, help="words per work item")
    p.add_argument("--map", type=Path, help="language code table (default: bundled ISO 639-1)")
    p.set_defaults(handler=_cmd_scan)

    p = sub.add_parser("validate", help="check one pronunciation")
    p.add_argument("ipa")
    p.add_argument("--diacritics", choices=_POLICIES)
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("transcribe", help="spell one pronunciation in Quechua")
    p.add_argument("ipa")
    p.add_argument("--diacritics", choices=_POLICIES)
    p.add_argument("--syllables", action="store_true", help="print the dotted syllabification")
    p.set_defaults(handler=_cmd_transcribe)

    p = sub.add_parser("dump-inventory", help="print the IPA -> spelling table")
    p.add_argument("--format", choices=[REPORT_TSV, REPORT_MARKDOWN], default=REPORT_TSV, dest="fmt")
    p.set_defaults(handler=_cmd_dump_inventory)

    p = sub.add_parser("relabel", help="map language labels to 3-letter codes")
    p.add_argument("codes", nargs="*", metavar="CODE", help="labels (default: one per stdin line)")
    p.add_argument("--map", type=Path)
    p.set_defaults(handler=_cmd_relabel)

    p = sub.add_parser("build-gloss-index", help="write a gloss index from NLTK WordNet")
    p.add_argument("--lang", action="append", required=True, help="3-letter WordNet language (repeatable)")
    p.add_argument("--out", required=True, type=Path)
    p.set_defaults(handler=_cmd_build_gloss_index)

    p = sub.add_parser("config", help="print the effective configuration")
    p.add_argument("--init", action="store_true", help="write the defaults to the config file")
    return parser


def _policy(args: argparse.Namespace, config: MinerConfig) -> DiacriticPolicy:
    return DiacriticPolicy(args.diacritics or config.diacritics)


def _read_entries(args: argparse.Namespace, config: MinerConfig) -> tuple[list[DictEntry], int]:
    """Read every input file; return the entries and the number of files skipped."""
    code_map = load_language_map(args.map or config.language_map or None)
    language = None if args.lang == LANG_AUTO else args.lang
    entries: list[DictEntry] = []
    skipped = 0
    for path in args.files:
        try:
            # Read the whole file first so a late decode error drops all of it
            file_entries = list(read_dictionary(path, args.fmt, language=language, code_map=code_map))
        except FileUnreadableError as exc:
            log.error("Skipping %s: %s", path, exc)
            skipped += 1
            continue
        except UnknownCodeError as exc:
            log.warning("Skipping %s: %s", path, exc)
            skipped += 1
            continue
        entries.extend(file_entries)
    return entries, skipped


def _cmd_scan(args: argparse.Namespace, config: MinerConfig) -> int:
    workers = args.workers if args.workers is not None else config.workers
    batch_size = args.batch_size if args.batch_size is not None else config.batch_size
    if workers < 1 or batch_size < 1:
        log.error("--workers and --batch-size must be at least 1")
        return EXIT_USAGE
    report_format = args.report or config.report_format

    try:
        entries, skipped = _read_entries(args, config)
        gloss_path = args.gloss or config.gloss_index
        index = load_gloss_index(gloss_path) if gloss_path else None
    except (FileUnreadableError, LanguageMapError) as exc:
        log.error("%s", exc)
        return EXIT_IO

    try:
        result = scan(entries, _policy(args, config), index, workers=workers, batch_size=batch_size)
    except ScanError as exc:
        log.error("Scan aborted: %s", exc)
        return EXIT_IO
    for language, reasons in sorted(result.rejections.items()):
        summary = ", ".join(f"{r.value}={n}" for r, n in reasons.most_common())
        log.info("%s rejections: %s", language, summary)

    try:
        write_candidates(result.candidates, args.out)
        if args.report_out:
            write_report(result.stats.values(), args.report_out, report_format)
        else:
            sys.stdout.write(render_report(result.stats.values(), report_format))
    except FileUnwritableError as exc:
        log.error("%s", exc)
        return EXIT_IO
    if skipped:
        log.warning("%d input file(s) skipped", skipped)
        return EXIT_IO
    return EXIT_OK


def _cmd_validate(args: argparse.Namespace, config: MinerConfig) -> int:
    result = validate_ipa(args.ipa, _policy(args, config))
    verdict = "eligible" if result.eligible else "ineligible"
    sys.stdout.write(tsv_line((verdict, result.reason.value, result.syllabification or "-")))
    if result.detail:
        log.info("%s", result.detail)
    return EXIT_OK


def _cmd_transcribe(args: argparse.Namespace, config: MinerConfig) -> int:
    result = validate_ipa(args.ipa, _policy(args, config))
    if not result.eligible:
        log.error("%s is not eligible: %s %s", args.ipa, result.reason.value, result.detail)
        return EXIT_USAGE
    sys.stdout.write((result.syllabification if args.syllables else transcribe(result)) + "\n")
    return EXIT_OK


def _cmd_dump_inventory(args: argparse.Namespace, config: MinerConfig) -> int:
    rows = inventory_rows()
    if args.fmt == REPORT_MARKDOWN:
        lines = [markdown_line(("IPA", "Spelling")), markdown_line(("---", "---"))]
        lines += [markdown_line(row) for row in rows]
    else:
        lines = [tsv_line(row) for row in rows]
    sys.stdout.write("".join(lines))
    return EXIT_OK


def _cmd_relabel(args: argparse.Namespace, config: MinerConfig) -> int:
    try:
        code_map = load_language_map(args.map or config.language_map or None)
    except (FileUnreadableError, LanguageMapError) as exc:
        log.error("%s", exc)
        return EXIT_IO
    codes = args.codes or [line.strip() for line in sys.stdin if line.strip()]
    status = EXIT_OK
    for code in codes:
        try:
            sys.stdout.write(tsv_line((code, relabel_language(code, code_map))))
        except UnknownCodeError as exc:
            log.error("%s", exc)
            status = EXIT_USAGE
    return status


def _cmd_build_gloss_index(args: argparse.Namespace, config: MinerConfig) -> int:
    try:
        rows = build_wordnet_index(args.out, args.lang)
    except ChaskiqError as exc:
        log.error("%s", exc)
        return EXIT_IO
    log.info("Wrote %d gloss rows to %s", rows, args.out)
    return EXIT_OK


def _cmd_config(args: argparse.Namespace, manager: ConfigManager) -> int:
    if args.init:
        try:
            manager.reset()
        except OSError as exc:
            log.error("Cannot write %s: %s", manager.path, exc)
            return EXIT_IO
        log.info("Default config written to %s", manager.path)
    sys.stdout.write(json.dumps(asdict(manager.config), indent=2) + "\n")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    """Run the CLI; return the process exit status."""
    args = build_parser().parse_args(argv)
    manager = ConfigManager(args.config)
    config = manager.config

    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    else:
        level = logging.getLevelName(str(config.log_level).upper())
        if not isinstance(level, int):
            level = logging.INFO
    setup_logging(level, log_file=args.log_file, to_log_dir=config.log_to_file)
    log.debug("%s %s, config %s", APP_NAME, APP_VERSION, manager.path)

    try:
        config.validate()
    except ConfigError as exc:
        log.error("Invalid config %s: %s", manager.path, exc)
        if args.command != "config":
            return EXIT_USAGE

    if args.command == "config":
        return _cmd_config(args, manager)
    return args.handler(args, config)
