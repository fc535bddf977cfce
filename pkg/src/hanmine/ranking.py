"""Rank documents by how heavily they use a keyword set."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from hanmine.corpus import Corpus, find_all
from hanmine.trends import KeywordSet

SCHEMES = ("tf_sum", "distinct_count", "tf_sum_normalized")


@dataclass(frozen=True)
class RankedDoc:
    doc_id: str
    weight: float
    year: Optional[int]
    segment_index: Optional[int]
    author: str
    title: str
    breakdown: dict[str, int]  # keyword -> occurrence count in this document


def rank_documents(
    corpus: Corpus,
    keyword_set: KeywordSet,
    scheme: str = "tf_sum",
    year: Optional[int] = None,
    drop_zero: bool = False,
) -> list[RankedDoc]:
    """Sort documents by keyword weight, descending, ties broken by doc_id.

    tf_sum sums keyword occurrences, distinct_count counts set keywords
    present, tf_sum_normalized divides tf_sum by document length.  A year
    filter reproduces per-year rankings.
    """
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {SCHEMES}")
    ranked = []
    for doc in corpus.documents:
        if year is not None and doc.year != year:
            continue
        breakdown = {kw: len(find_all(doc.text, kw)) for kw in keyword_set.keywords}
        tf_sum = sum(breakdown.values())
        if scheme == "tf_sum":
            weight = float(tf_sum)
        elif scheme == "distinct_count":
            weight = float(sum(1 for c in breakdown.values() if c > 0))
        else:
            weight = tf_sum / len(doc.text)
        if drop_zero and tf_sum == 0:
            continue
        ranked.append(
            RankedDoc(
                doc_id=doc.doc_id,
                weight=weight,
                year=doc.year,
                segment_index=doc.segment_index,
                author=doc.author,
                title=doc.title,
                breakdown=breakdown,
            )
        )
    ranked.sort(key=lambda r: (-r.weight, r.doc_id))
    return ranked


def ranking_csv(ranked: list[RankedDoc]) -> str:
    lines = ["rank,weight,doc_id,year,author,title"]
    for i, r in enumerate(ranked, 1):
        weight = int(r.weight) if float(r.weight).is_integer() else repr(r.weight)
        year = "" if r.year is None else r.year
        lines.append(f"{i},{weight},{r.doc_id},{year},{r.author},{r.title}")
    return "\n".join(lines) + "\n"


def ranking_json(ranked: list[RankedDoc]) -> str:
    return json.dumps(
        [
            {
                "rank": i,
                "weight": r.weight,
                "doc_id": r.doc_id,
                "year": r.year,
                "segment_index": r.segment_index,
                "author": r.author,
                "title": r.title,
                "breakdown": r.breakdown,
            }
            for i, r in enumerate(ranked, 1)
        ],
        ensure_ascii=False,
    )
