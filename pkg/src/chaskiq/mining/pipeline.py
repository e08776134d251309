"""Scan dictionary entries for words that already sound like Quechua.

Words are grouped by (language, headword), cut into batches and validated by
a pool of ScanWorker threads. Each batch yields a partial result; the
partials are merged once the pool has drained, so worker count and
scheduling never affect the outcome.
"""

from __future__ import annotations

import logging
import queue
import threading
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from chaskiq.constants import DEFAULT_BATCH_SIZE, WORKER_POLL_S
from chaskiq.errors import ScanError
from chaskiq.ipa.normalizer import normalize
from chaskiq.ipa.tokenizer import DiacriticPolicy
from chaskiq.lexicon.gloss import GlossProvider
from chaskiq.lexicon.reader import DictEntry
from chaskiq.mining.records import Candidate, LanguageStats
from chaskiq.phonology.phonotactics import Reason, validate_ipa
from chaskiq.phonology.transcriber import transcribe

log = logging.getLogger(__name__)

# (language, headword, variants)
Word = tuple[str, str, tuple[str, ...]]


@dataclass
class ScanResult:
    candidates: list[Candidate]
    stats: dict[str, LanguageStats]
    rejections: dict[str, Counter[Reason]]


@dataclass
class _Batch:
    index: int
    words: list[Word]


@dataclass
class _Partial:
    index: int
    candidates: list[Candidate] = field(default_factory=list)
    totals: Counter[str] = field(default_factory=Counter)
    rejections: dict[str, Counter[Reason]] = field(default_factory=dict)
    error: Exception | None = None


def evaluate_word(
    language: str,
    headword: str,
    variants: Iterable[str],
    policy: DiacriticPolicy = DiacriticPolicy.REJECT,
    index: GlossProvider | None = None,
) -> tuple[Candidate | None, Reason]:
    """Try *variants* in order; the first eligible one becomes the Candidate.

    A rejected word reports the reason of its first variant.
    """
    first_reason: Reason | None = None
    for variant in variants:
        result = validate_ipa(variant, policy)
        if result.eligible:
            glosses = tuple(index.lookup(language, headword)) if index is not None else ()
            return Candidate(
                language=language,
                headword=headword,
                ipa=normalize(variant),
                spelling=transcribe(result),
                syllabification=result.syllabification,
                glosses=glosses,
            ), Reason.OK
        first_reason = first_reason or result.reason
    return None, first_reason or Reason.EMPTY


def group_entries(entries: Iterable[DictEntry]) -> list[Word]:
    """Merge entries sharing (language, headword), keeping variant order."""
    words: dict[tuple[str, str], dict[str, None]] = {}
    for entry in entries:
        variants = words.setdefault((entry.language, entry.headword), {})
        variants.update(dict.fromkeys(entry.variants))
    return [(lang, headword, tuple(variants)) for (lang, headword), variants in words.items()]


class ScanWorker(threading.Thread):
    """Daemon thread that reads word batches from work_queue and pushes one
    partial result per batch to result_queue.

    Args:
        work_queue: Input queue of _Batch objects.
        result_queue: Output queue of _Partial objects.
        policy: Diacritic policy for every pronunciation.
        index: Optional gloss provider, shared read-only.
    """

    def __init__(
        self,
        work_queue: queue.Queue,
        result_queue: queue.Queue,
        policy: DiacriticPolicy,
        index: GlossProvider | None = None,
        name: str = "ScanWorker",
    ) -> None:
        super().__init__(name=name, daemon=True)
        self.work_queue = work_queue
        self.result_queue = result_queue
        self.policy = policy
        self.index = index
        self._stop_event = threading.Event()

    def stop(self) -> None:
        """No more batches will be queued; finish what is left and exit."""
        self._stop_event.set()

    def stopped(self) -> bool:
        return self._stop_event.is_set()

    def run(self) -> None:
        log.debug("%s started", self.name)
        while not self.stopped():
            try:
                batch = self.work_queue.get(timeout=WORKER_POLL_S)
            except queue.Empty:
                continue
            self._process_batch(batch)

        # Drain batches still queued after the stop signal
        while True:
            try:
                batch = self.work_queue.get_nowait()
            except queue.Empty:
                break
            self._process_batch(batch)
        log.debug("%s stopped", self.name)

    def _process_batch(self, batch: _Batch) -> None:
        partial = _Partial(batch.index)
        try:
            for language, headword, variants in batch.words:
                candidate, reason = evaluate_word(language, headword, variants, self.policy, self.index)
                partial.totals[language] += 1
                if candidate is not None:
                    partial.candidates.append(candidate)
                else:
                    partial.rejections.setdefault(language, Counter())[reason] += 1
        except Exception as exc:
            log.error("Scan failed for batch %d", batch.index, exc_info=True)
            partial = _Partial(batch.index, error=exc)
        self.result_queue.put(partial)


def _merge(partials: list[_Partial]) -> ScanResult:
    candidates: list[Candidate] = []
    totals: Counter[str] = Counter()
    eligible: Counter[str] = Counter()
    translated: Counter[str] = Counter()
    rejections: dict[str, Counter[Reason]] = {}
    for partial in sorted(partials, key=lambda p: p.index):
        candidates.extend(partial.candidates)
        totals.update(partial.totals)
        for language, reasons in partial.rejections.items():
            rejections.setdefault(language, Counter()).update(reasons)
    for candidate in candidates:
        eligible[candidate.language] += 1
        translated[candidate.language] += candidate.translated
    stats = {
        language: LanguageStats(language, totals[language], eligible[language], translated[language])
        for language in sorted(totals)
    }
    candidates.sort(key=Candidate.sort_key)
    return ScanResult(candidates, stats, rejections)


def scan(
    entries: Iterable[DictEntry],
    policy: DiacriticPolicy = DiacriticPolicy.REJECT,
    index: GlossProvider | None = None,
    workers: int = 1,
    batch_size: int = DEFAULT_BATCH_SIZE,
) -> ScanResult:
    """Validate every word in *entries* and collect candidates and statistics.

    Raises:
        ScanError: a worker failed on a batch (logged with traceback).
        ValueError: workers or batch_size below 1.
    """
    if workers < 1 or batch_size < 1:
        raise ValueError("workers and batch_size must be at least 1")
    words = group_entries(entries)
    work_queue: queue.Queue[_Batch] = queue.Queue()
    result_queue: queue.Queue[_Partial] = queue.Queue()
    batches = 0
    for start in range(0, len(words), batch_size):
        work_queue.put(_Batch(batches, words[start:start + batch_size]))
        batches += 1

    t0 = time.perf_counter()
    pool = [
        ScanWorker(work_queue, result_queue, policy, index, name=f"ScanWorker-{n}")
        for n in range(min(workers, max(batches, 1)))
    ]
    # Every batch is already queued: workers drain the queue and exit
    # without blocking on an empty one
    for worker in pool:
        worker.stop()
        worker.start()
    for worker in pool:
        worker.join()

    partials = [result_queue.get_nowait() for _ in range(result_queue.qsize())]
    failed = [p for p in partials if p.error is not None]
    if failed:
        raise ScanError(f"{len(failed)} of {batches} batches failed") from failed[0].error

    result = _merge(partials)
    log.info(
        "Scanned %d words in %d batches with %d workers in %.1fs: %d eligible",
        len(words), batches, len(pool), time.perf_counter() - t0, len(result.candidates),
    )
    return result
