"""Application constants and file-format configuration."""

APP_NAME = "Chaskiq"
APP_VERSION = "0.3.0"

# Source dictionary formats
FORMAT_OPEN_DICT = "open-dict"
FORMAT_WIKIPRON = "wikipron"

# Diacritic policy names as they appear in config and on the command line
DIACRITICS_REJECT = "reject"
DIACRITICS_STRIP = "strip"

# Report formats
REPORT_TSV = "tsv"
REPORT_MARKDOWN = "md"

# Language label used when the code is derived from the file name
LANG_AUTO = "auto"

# Scan pool
DEFAULT_WORKERS = 1
DEFAULT_BATCH_SIZE = 2000  # words per work item handed to a scan worker
WORKER_POLL_S = 0.5  # how long an idle worker blocks on the work queue

# Bundled ISO 639-1 -> 639-3 correspondence table (src/chaskiq/data/)
LANGUAGE_MAP_FILE = "iso639-1.tsv"

# Output layouts
CANDIDATE_HEADER = (
    "language", "headword", "ipa", "spelling", "syllabification", "glosses",
)
GLOSS_SEPARATOR = ";"
SYLLABLE_SEPARATOR = "."

REPORT_TSV_HEADER = (
    "language", "total", "eligible", "translated",
    "eligible/total", "translated/eligible",
)
REPORT_MD_HEADER = (
    "Language", "Words Total", "Words Eligible", "Words Translated",
    "Eligible/Total", "Translated/Eligible",
)
REPORT_TOTAL_LABEL = "TOTAL"

# Malformed lines logged individually before switching to DEBUG
MALFORMED_WARN_LIMIT = 5

# Process exit status
EXIT_OK = 0
EXIT_IO = 1      # unreadable input, unwritable output, skipped files
EXIT_USAGE = 2   # bad arguments, ineligible input to transcribe, unknown codes
