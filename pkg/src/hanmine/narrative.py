"""Chapter-indexed narrative statistics.

Raw pattern frequencies per chapter mislead when chapter lengths vary, so
the module also provides length-normalized proportions and conditional
event ratios (how often a base mention is part of a longer event phrase,
e.g. a name followed by "smiled and said").
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from hanmine.corpus import Corpus, Document, find_all

KINDS = ("raw_freq", "length", "normalized", "event_freq", "ratio")


@dataclass(frozen=True)
class SegmentSeries:
    kind: str
    segments: tuple[int, ...]
    values: tuple[Optional[float], ...]  # None marks an undefined ratio

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown series kind {self.kind!r}")
        if len(self.segments) != len(self.values):
            raise ValueError("segments and values differ in length")

    def to_csv(self) -> str:
        lines = ["segment,value"]
        for seg, v in zip(self.segments, self.values):
            cell = "" if v is None else (str(int(v)) if float(v).is_integer() and self.kind != "normalized" and self.kind != "ratio" else repr(v))
            lines.append(f"{seg},{cell}")
        return "\n".join(lines) + "\n"


def _segments(corpus: Corpus) -> list[Document]:
    if not corpus.has_segments:
        raise ValueError("corpus is not chaptered (documents carry years)")
    return sorted(corpus.documents, key=lambda d: d.segment_index)


def segment_frequencies(corpus: Corpus, pattern: str) -> SegmentSeries:
    """f_t: overlapping occurrence count of ``pattern`` per chapter."""
    if not pattern:
        raise ValueError("pattern must be non-empty")
    docs = _segments(corpus)
    return SegmentSeries(
        kind="raw_freq",
        segments=tuple(d.segment_index for d in docs),
        values=tuple(float(len(find_all(d.text, pattern))) for d in docs),
    )


def segment_lengths(corpus: Corpus) -> SegmentSeries:
    """l_t: normalized codepoint count per chapter."""
    docs = _segments(corpus)
    return SegmentSeries(
        kind="length",
        segments=tuple(d.segment_index for d in docs),
        values=tuple(float(len(d.text)) for d in docs),
    )


def normalized_frequencies(freqs: SegmentSeries, lengths: SegmentSeries) -> SegmentSeries:
    """f_t / l_t pointwise; the chapter ranges must match."""
    if freqs.segments != lengths.segments:
        raise ValueError("segment ranges differ")
    if any(v is None or v <= 0 for v in lengths.values):
        raise ValueError("all segment lengths must be > 0")
    return SegmentSeries(
        kind="normalized",
        segments=freqs.segments,
        values=tuple(f / l for f, l in zip(freqs.values, lengths.values)),
    )


def conditional_ratio(corpus: Corpus, base_pattern: str, event_pattern: str) -> SegmentSeries:
    """s_t / m_t per chapter, where m_t counts ``base_pattern`` and s_t the
    longer ``event_pattern`` embedding it; None where the base never occurs.

    Requiring the event to contain the base guarantees s_t <= m_t, so the
    ratio is a probability.
    """
    if not base_pattern or not event_pattern:
        raise ValueError("patterns must be non-empty")
    if base_pattern not in event_pattern:
        raise ValueError("event must embed base")
    docs = _segments(corpus)
    values: list[Optional[float]] = []
    for d in docs:
        m = len(find_all(d.text, base_pattern))
        if m == 0:
            values.append(None)
            continue
        s = len(find_all(d.text, event_pattern))
        values.append(s / m)
    return SegmentSeries(
        kind="ratio",
        segments=tuple(d.segment_index for d in docs),
        values=tuple(values),
    )


def combined_csv(corpus: Corpus, base_pattern: str, event_pattern: str) -> str:
    """Per-chapter export: segment,f,l,f_over_l,s,m,ratio."""
    f = segment_frequencies(corpus, base_pattern)
    l = segment_lengths(corpus)
    s = segment_frequencies(corpus, event_pattern)
    ratio = conditional_ratio(corpus, base_pattern, event_pattern)
    lines = ["segment,f,l,f_over_l,s,m,ratio"]
    for i, seg in enumerate(f.segments):
        ft, lt, st = f.values[i], l.values[i], s.values[i]
        rt = ratio.values[i]
        lines.append(
            f"{seg},{int(ft)},{int(lt)},{ft / lt!r},{int(st)},{int(ft)},"
            + ("" if rt is None else repr(rt))
        )
    return "\n".join(lines) + "\n"
