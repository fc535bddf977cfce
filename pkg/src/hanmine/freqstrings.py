"""Frequent-substring extraction over a suffix array + LCP index.

Documents are concatenated with sentinel separators and indexed once; every
substring that occurs at least ``min_freq`` times (never across a document
boundary) is then read off the LCP array in one linear pass per length.
This produces the same frequent strings a Patricia/PAT tree would, with
much better memory behaviour on multi-million-character corpora.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from pydivsufsort import divsufsort, kasai

from hanmine.corpus import Corpus

DEFAULT_MIN_FREQ = 11  # "more than 10 times", read strictly
DEFAULT_MAX_LEN = 8


class CapacityError(RuntimeError):
    """Corpus exceeds the configured indexing budget (never truncated silently)."""


@dataclass(frozen=True)
class SuffixIndex:
    """Suffix array over the sentinel-joined corpus.

    ``codes`` holds codepoint+1 per position with 0 as the document
    sentinel, so the sentinel sorts first and can never collide with text.
    ``lcp[i]`` is the longest common prefix of the suffixes at ``sa[i-1]``
    and ``sa[i]`` (``lcp[0] == 0``).  ``remaining[p]`` counts text
    characters from ``p`` to the end of its document, and ``doc_of[p]``
    maps a position to its document's index in the corpus.
    """

    corpus: Corpus
    codes: np.ndarray
    sa: np.ndarray
    lcp: np.ndarray
    doc_of: np.ndarray
    remaining: np.ndarray
    doc_starts: tuple[int, ...]

    def decode(self, start: int, length: int) -> str:
        return "".join(chr(c - 1) for c in self.codes[start:start + length])

    @property
    def size(self) -> int:
        return len(self.codes)


def build_index(corpus: Corpus, max_chars: int = 50_000_000) -> SuffixIndex:
    """Index every document of ``corpus``; deterministic for equal corpora."""
    total = corpus.total_chars + corpus.doc_count  # one sentinel per document
    if total > max_chars:
        raise CapacityError(
            f"corpus needs {total} indexed positions, budget is {max_chars}"
        )
    codes = np.zeros(total, dtype=np.int32)
    doc_of = np.zeros(total, dtype=np.int32)
    remaining = np.zeros(total, dtype=np.int32)
    starts = []
    pos = 0
    for i, doc in enumerate(corpus.documents):
        starts.append(pos)
        n = len(doc.text)
        codes[pos:pos + n] = np.frombuffer(doc.text.encode("utf-32-le"), dtype=np.uint32).astype(np.int32) + 1
        doc_of[pos:pos + n + 1] = i
        remaining[pos:pos + n] = np.arange(n, 0, -1, dtype=np.int32)
        pos += n + 1  # sentinel stays 0
    sa = np.asarray(divsufsort(codes))
    lcp_next = np.asarray(kasai(codes, sa))  # lcp_next[i] = lcp(sa[i], sa[i+1])
    lcp = np.zeros_like(lcp_next)
    lcp[1:] = lcp_next[:-1]
    return SuffixIndex(
        corpus=corpus,
        codes=codes,
        sa=sa,
        lcp=lcp,
        doc_of=doc_of,
        remaining=remaining,
        doc_starts=tuple(starts),
    )


@dataclass(frozen=True)
class Pseudoword:
    string: str
    length: int
    total_freq: int
    doc_freq: int = 0


@dataclass(frozen=True)
class PseudowordTable:
    corpus_name: str
    min_freq: int
    min_len: int
    max_len: int
    maximal_only: bool
    entries: tuple[Pseudoword, ...]

    def to_csv(self) -> str:
        lines = ["string,length,total_freq,doc_freq"]
        for e in self.entries:
            lines.append(f"{e.string},{e.length},{e.total_freq},{e.doc_freq}")
        return "\n".join(lines) + "\n"

    def strings(self) -> list[str]:
        return [e.string for e in self.entries]


def _runs_at_length(index: SuffixIndex, length: int, min_freq: int):
    """(sa_position, run_size) per distinct sentinel-free substring of ``length``
    occurring at least ``min_freq`` times.

    Suffixes sharing their first ``length`` characters are adjacent in the
    suffix array, and a suffix containing a sentinel in that prefix can
    never share it with one that does not, so plain LCP runs restricted to
    long-enough suffixes enumerate the distinct substrings exactly.
    """
    ok = index.remaining[index.sa] >= length
    breaks = index.lcp < length
    run_start = ok & (breaks | ~np.concatenate(([True], ok[:-1])) )
    run_start[0] = ok[0]
    run_id = np.cumsum(run_start) - 1
    sizes = np.bincount(run_id[ok]) if ok.any() else np.array([], dtype=np.int64)
    first_idx = np.flatnonzero(run_start)
    keep = sizes >= min_freq
    return index.sa[first_idx[keep]], sizes[keep]


def extract_pseudowords(
    index: SuffixIndex,
    min_freq: int = DEFAULT_MIN_FREQ,
    min_len: int = 1,
    max_len: int = DEFAULT_MAX_LEN,
    maximal_only: bool = False,
) -> PseudowordTable:
    """All substrings with min_len <= length <= max_len and frequency >= min_freq.

    With ``maximal_only`` set, a string is dropped when extending it by one
    character (left or right) loses no occurrences: the extension has the
    same frequency and therefore subsumes it.
    """
    if min_freq < 2:
        raise ValueError("min_freq must be >= 2")
    if not (1 <= min_len <= max_len):
        raise ValueError("need 1 <= min_len <= max_len")
    by_length: dict[int, dict[str, int]] = {}
    # max_len + 1 is needed so the subsumption test also sees the
    # extensions of strings sitting exactly at max_len.
    top = max_len + 1 if maximal_only else max_len
    for length in range(min_len, top + 1):
        found: dict[str, int] = {}
        positions, sizes = _runs_at_length(index, length, min_freq)
        for pos, size in zip(positions.tolist(), sizes.tolist()):
            found[index.decode(pos, length)] = size
        by_length[length] = found
    subsumed: set[str] = set()
    if maximal_only:
        for length in range(min_len, max_len + 1):
            longer = by_length.get(length + 1, {})
            shorter = by_length[length]
            for ext, freq in longer.items():
                for sub in (ext[1:], ext[:-1]):
                    if shorter.get(sub) == freq:
                        subsumed.add(sub)
    entries = [
        Pseudoword(string=s, length=length, total_freq=freq)
        for length in range(min_len, max_len + 1)
        for s, freq in by_length[length].items()
        if s not in subsumed
    ]
    entries.sort(key=lambda e: (-e.total_freq, e.string))
    return PseudowordTable(
        corpus_name=index.corpus.name,
        min_freq=min_freq,
        min_len=min_len,
        max_len=max_len,
        maximal_only=maximal_only,
        entries=tuple(entries),
    )


def _byte_view(index: SuffixIndex) -> bytes:
    # Big-endian 4-byte codes compare like the codepoints themselves, so
    # suffix/pattern comparisons become plain memcmp slices.  Cached per index.
    cached = getattr(index, "_bytes", None)
    if cached is None:
        cached = index.codes.astype(">u4").tobytes()
        object.__setattr__(index, "_bytes", cached)
    return cached


def sa_interval(index: SuffixIndex, pattern: str) -> tuple[int, int]:
    """Half-open suffix-array interval of suffixes starting with ``pattern``."""
    if not pattern:
        raise ValueError("pattern must be non-empty")
    buf = _byte_view(index)
    pat = (np.frombuffer(pattern.encode("utf-32-le"), dtype=np.uint32) + 1).astype(">u4").tobytes()
    n = len(index.sa)
    plen = len(pat)

    def prefix_at(i: int) -> bytes:
        p = 4 * int(index.sa[i])
        return buf[p:p + plen]

    lo, hi = 0, n
    while lo < hi:  # first suffix with prefix >= pattern
        mid = (lo + hi) // 2
        if prefix_at(mid) < pat:
            lo = mid + 1
        else:
            hi = mid
    start = lo
    hi = n
    while lo < hi:  # first suffix with prefix > pattern
        mid = (lo + hi) // 2
        if prefix_at(mid) <= pat:
            lo = mid + 1
        else:
            hi = mid
    return start, lo


def index_frequency(index: SuffixIndex, pattern: str) -> int:
    lo, hi = sa_interval(index, pattern)
    return hi - lo


def annotate_doc_frequencies(index: SuffixIndex, table: PseudowordTable) -> PseudowordTable:
    """Fill in, per entry, the number of documents containing it."""
    annotated = []
    for e in table.entries:
        lo, hi = sa_interval(index, e.string)
        doc_freq = int(np.unique(index.doc_of[index.sa[lo:hi]]).size)
        annotated.append(
            Pseudoword(
                string=e.string,
                length=e.length,
                total_freq=e.total_freq,
                doc_freq=doc_freq,
            )
        )
    return PseudowordTable(
        corpus_name=table.corpus_name,
        min_freq=table.min_freq,
        min_len=table.min_len,
        max_len=table.max_len,
        maximal_only=table.maximal_only,
        entries=tuple(annotated),
    )
