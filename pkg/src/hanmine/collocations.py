"""Keyword co-occurrence within a character window.

Two occurrences collocate when the gap between their nearest ends is at
most W characters (overlapping occurrences have gap 0).  Each unordered
occurrence pair counts once, and pairs never span documents.
"""

from __future__ import annotations

import json
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from typing import Optional, Sequence

from hanmine.corpus import Corpus, find_all

DEFAULT_WINDOW = 30


@dataclass(frozen=True)
class CollocationSpec:
    keyword_a: str
    keyword_b: str
    window: int = DEFAULT_WINDOW

    def __post_init__(self) -> None:
        if not self.keyword_a or not self.keyword_b:
            raise ValueError("both keywords must be non-empty")
        if self.keyword_a == self.keyword_b:
            raise ValueError("self-collocation (a == b) is undefined")
        if self.window < 0:
            raise ValueError("window must be >= 0")


@dataclass(frozen=True)
class CollocationCounts:
    spec: CollocationSpec
    per_doc: dict[str, int]
    per_year: dict[int, int]  # empty for chaptered corpora
    total: int


@dataclass(frozen=True)
class CollocationSeries:
    spec: CollocationSpec
    years: tuple[int, ...]
    counts: tuple[int, ...]
    total: int

    @property
    def has_cooccurrences(self) -> bool:
        return self.total > 0

    def ratios(self) -> list[Optional[float]]:
        if self.total == 0:
            return [None] * len(self.counts)
        return [c / self.total for c in self.counts]

    def to_csv(self, window_column: bool = False) -> str:
        head = "year,count,ratio"
        if window_column:
            head += ",window"
        lines = [head]
        for year, count, ratio in zip(self.years, self.counts, self.ratios()):
            row = f"{year},{count}," + ("" if ratio is None else repr(ratio))
            if window_column:
                row += f",{self.spec.window}"
            lines.append(row)
        return "\n".join(lines) + "\n"


def _doc_pair_count(text: str, spec: CollocationSpec, events: bool = False) -> int:
    """Collocation count inside one document.

    An occurrence of b at q pairs with a at p iff
    p - len(b) - W <= q <= p + len(a) + W, which is exactly gap <= W for
    either order.  ``events`` counts occurrences having at least one
    partner instead of occurrence pairs.
    """
    pos_a = find_all(text, spec.keyword_a)
    if not pos_a:
        return 0
    pos_b = find_all(text, spec.keyword_b)
    if not pos_b:
        return 0
    la, lb, w = len(spec.keyword_a), len(spec.keyword_b), spec.window
    if not events:
        return sum(
            bisect_right(pos_b, p + la + w) - bisect_left(pos_b, p - lb - w)
            for p in pos_a
        )
    with_partner = sum(
        1 for p in pos_a if bisect_right(pos_b, p + la + w) > bisect_left(pos_b, p - lb - w)
    )
    with_partner += sum(
        1 for q in pos_b if bisect_right(pos_a, q + lb + w) > bisect_left(pos_a, q - la - w)
    )
    return with_partner


def count_collocations(
    corpus: Corpus, spec: CollocationSpec, events: bool = False
) -> CollocationCounts:
    per_doc = {
        d.doc_id: _doc_pair_count(d.text, spec, events) for d in corpus.documents
    }
    per_year: dict[int, int] = {}
    if corpus.has_years:
        for d in corpus.documents:
            per_year[d.year] = per_year.get(d.year, 0) + per_doc[d.doc_id]
    return CollocationCounts(
        spec=spec,
        per_doc=per_doc,
        per_year=per_year,
        total=sum(per_doc.values()),
    )


def collocation_trend(
    corpus: Corpus, spec: CollocationSpec, events: bool = False
) -> CollocationSeries:
    """Per-year co-occurrence counts over the corpus year range."""
    if not corpus.has_years:
        raise ValueError("corpus documents carry no years")
    counts = count_collocations(corpus, spec, events)
    lo = min(d.year for d in corpus.documents)
    hi = max(d.year for d in corpus.documents)
    years = tuple(range(lo, hi + 1))
    series = tuple(counts.per_year.get(y, 0) for y in years)
    return CollocationSeries(spec=spec, years=years, counts=series, total=sum(series))


def window_sweep(
    corpus: Corpus,
    keyword_a: str,
    keyword_b: str,
    windows: Sequence[int],
    events: bool = False,
) -> list[CollocationSeries]:
    if list(windows) != sorted(windows):
        raise ValueError("windows must be sorted ascending")
    return [
        collocation_trend(
            corpus, CollocationSpec(keyword_a, keyword_b, window=w), events
        )
        for w in windows
    ]


def sweep_csv(series_list: Sequence[CollocationSeries]) -> str:
    lines = ["year,count,ratio,window"]
    for s in series_list:
        body = s.to_csv(window_column=True).splitlines()[1:]
        lines.extend(body)
    return "\n".join(lines) + "\n"
