"""Corpus ingestion and exact substring search.

A corpus is an immutable, ordered collection of documents whose text has
been reduced to bare Unicode scalar values: by default whitespace, ASCII,
and CJK punctuation are removed so that counts do not depend on the
punctuation added by modern editions.  All positions, lengths, and window
sizes elsewhere in the package are measured in these normalized codepoints.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence


class IngestError(ValueError):
    """Raised when a manifest or one of its documents cannot be ingested."""


# Punctuation commonly found in modern editions of Chinese text: CJK
# symbols/punctuation, vertical and fullwidth forms, plus the general
# punctuation marks (quotes, dashes, ellipsis, middle dot) editors add.
_CJK_PUNCT_RANGES = (
    (0x3000, 0x303F),
    (0xFE30, 0xFE4F),
    (0xFF01, 0xFF0F),
    (0xFF1A, 0xFF20),
    (0xFF3B, 0xFF40),
    (0xFF5B, 0xFF65),
)
_CJK_PUNCT_EXTRA = set("·–—‘’“”…‧・")


def _is_cjk_punct(ch: str) -> bool:
    o = ord(ch)
    for lo, hi in _CJK_PUNCT_RANGES:
        if lo <= o <= hi:
            return True
    return ch in _CJK_PUNCT_EXTRA


@dataclass(frozen=True)
class NormalizationPolicy:
    """Which codepoints survive ingestion.

    ``custom_keep`` wins over every drop rule; ``custom_drop`` is applied
    last.  The filter is per-character, so normalization is idempotent.
    """

    strip_whitespace: bool = True
    strip_ascii: bool = True
    strip_cjk_punctuation: bool = True
    custom_keep: frozenset[str] = frozenset()
    custom_drop: frozenset[str] = frozenset()

    def keeps(self, ch: str) -> bool:
        if ch in self.custom_keep:
            return True
        if ch in self.custom_drop:
            return False
        if self.strip_whitespace and ch.isspace():
            return False
        if self.strip_ascii and ord(ch) < 128:
            return False
        if self.strip_cjk_punctuation and _is_cjk_punct(ch):
            return False
        return True

    def normalize(self, text: str) -> str:
        return "".join(ch for ch in text if self.keeps(ch))


@dataclass(frozen=True)
class Document:
    """One dated (or chapter-indexed) text unit."""

    doc_id: str
    title: str
    author: str
    text: str
    raw_length: int
    year: Optional[int] = None
    segment_index: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.text:
            raise IngestError(f"document {self.doc_id!r} is empty after normalization")
        if (self.year is None) == (self.segment_index is None):
            raise IngestError(
                f"document {self.doc_id!r} must have exactly one of year / segment_index"
            )
        if self.segment_index is not None and self.segment_index < 1:
            raise IngestError(f"document {self.doc_id!r}: segment_index must be >= 1")


@dataclass(frozen=True)
class Corpus:
    name: str
    documents: tuple[Document, ...]
    total_chars: int = field(init=False)
    distinct_chars: int = field(init=False)
    doc_count: int = field(init=False)

    def __post_init__(self) -> None:
        if not self.documents:
            raise IngestError(f"corpus {self.name!r} has no documents")
        ids = [d.doc_id for d in self.documents]
        if len(set(ids)) != len(ids):
            dup = sorted({i for i in ids if ids.count(i) > 1})
            raise IngestError(f"duplicate doc_id(s): {', '.join(dup)}")
        axes = {(d.year is None) for d in self.documents}
        if len(axes) > 1:
            raise IngestError("documents mix year and segment_index time axes")
        object.__setattr__(self, "total_chars", sum(len(d.text) for d in self.documents))
        object.__setattr__(
            self, "distinct_chars", len(set().union(*(set(d.text) for d in self.documents)))
        )
        object.__setattr__(self, "doc_count", len(self.documents))

    @property
    def has_years(self) -> bool:
        return self.documents[0].year is not None

    @property
    def has_segments(self) -> bool:
        return self.documents[0].segment_index is not None

    def __getitem__(self, doc_id: str) -> Document:
        for d in self.documents:
            if d.doc_id == doc_id:
                return d
        raise KeyError(doc_id)


@dataclass(frozen=True)
class CollectionStats:
    """The four per-collection summary columns."""

    pseudowords: int
    total_chars: int
    distinct_chars: int
    doc_count: int


DEFAULT_POLICY = NormalizationPolicy()

_MANIFEST_FIELDS = {"doc_id", "title", "author", "year", "segment_index", "file"}


def ingest_corpus(
    manifest: str | Path,
    policy: NormalizationPolicy = DEFAULT_POLICY,
    name: Optional[str] = None,
) -> Corpus:
    """Read a JSON-lines manifest and return the normalized corpus.

    Each manifest line is a JSON object with fields ``doc_id``, ``title``,
    ``author``, ``file``, and exactly one of ``year`` or ``segment_index``.
    ``file`` is resolved relative to the manifest.  Unknown fields are
    ignored.  Ingestion order is manifest order and the result is
    deterministic for byte-identical inputs.
    """
    manifest = Path(manifest)
    if not manifest.is_file():
        raise IngestError(f"manifest not found: {manifest}")
    documents: list[Document] = []
    seen: set[str] = set()
    for lineno, line in enumerate(manifest.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            row = json.loads(line)
        except json.JSONDecodeError as exc:
            raise IngestError(f"{manifest}:{lineno}: malformed manifest row: {exc}") from exc
        if not isinstance(row, dict):
            raise IngestError(f"{manifest}:{lineno}: manifest row is not an object")
        missing = {"doc_id", "file"} - row.keys()
        if missing:
            raise IngestError(
                f"{manifest}:{lineno}: missing field(s) {', '.join(sorted(missing))}"
            )
        doc_id = str(row["doc_id"])
        if doc_id in seen:
            raise IngestError(f"{manifest}:{lineno}: duplicate doc_id {doc_id!r}")
        seen.add(doc_id)
        year = row.get("year")
        segment = row.get("segment_index")
        if (year is None) == (segment is None):
            raise IngestError(
                f"{manifest}:{lineno}: row {doc_id!r} needs exactly one of year / segment_index"
            )
        path = manifest.parent / str(row["file"])
        if not path.is_file():
            raise IngestError(f"{manifest}:{lineno}: text file not found: {path}")
        try:
            raw = path.read_text(encoding="utf-8")
        except UnicodeDecodeError as exc:
            raise IngestError(f"{manifest}:{lineno}: {path} is not valid UTF-8: {exc}") from exc
        text = policy.normalize(raw)
        if not text:
            raise IngestError(
                f"{manifest}:{lineno}: document {doc_id!r} is empty after normalization"
            )
        documents.append(
            Document(
                doc_id=doc_id,
                title=str(row.get("title", "")),
                author=str(row.get("author", "")),
                text=text,
                raw_length=len(raw),
                year=int(year) if year is not None else None,
                segment_index=int(segment) if segment is not None else None,
            )
        )
    if not documents:
        raise IngestError(f"manifest {manifest} contains no documents")
    return Corpus(name=name or manifest.stem, documents=tuple(documents))


def corpus_stats(corpus: Corpus, table=None) -> CollectionStats:
    """Summary row: pseudoword count (0 without a table) plus corpus sizes."""
    pseudowords = len(table.entries) if table is not None else 0
    return CollectionStats(
        pseudowords=pseudowords,
        total_chars=corpus.total_chars,
        distinct_chars=corpus.distinct_chars,
        doc_count=corpus.doc_count,
    )


def find_all(text: str, pattern: str) -> list[int]:
    """All (overlapping) match start positions of ``pattern`` in ``text``."""
    positions = []
    i = text.find(pattern)
    while i != -1:
        positions.append(i)
        i = text.find(pattern, i + 1)
    return positions


@dataclass(frozen=True)
class Occurrences:
    pattern: str
    per_doc: dict[str, list[int]]
    total: int


def count_occurrences(corpus: Corpus, pattern: str) -> Occurrences:
    """Exact, overlapping matches per document; never across documents."""
    if not pattern:
        raise ValueError("pattern must be non-empty")
    per_doc = {d.doc_id: find_all(d.text, pattern) for d in corpus.documents}
    return Occurrences(
        pattern=pattern, per_doc=per_doc, total=sum(len(v) for v in per_doc.values())
    )


@dataclass(frozen=True)
class ConcordanceRow:
    doc_id: str
    position: int
    left: str
    match: str
    right: str


def concordance(corpus: Corpus, pattern: str, context: int) -> list[ConcordanceRow]:
    """Keyword-in-context rows, with contexts clipped at document edges."""
    if context < 0:
        raise ValueError("context must be >= 0")
    occ = count_occurrences(corpus, pattern)
    rows = []
    for doc in corpus.documents:
        text = doc.text
        for pos in occ.per_doc[doc.doc_id]:
            end = pos + len(pattern)
            rows.append(
                ConcordanceRow(
                    doc_id=doc.doc_id,
                    position=pos,
                    left=text[max(0, pos - context):pos],
                    match=text[pos:end],
                    right=text[end:end + context],
                )
            )
    return rows
