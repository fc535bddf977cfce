"""Keyword trend tables: annual counts, percentages, and special years.

For a keyword w, k_n is its occurrence count over all documents of year n
and K its corpus total.  The baseline totals t_n sum the per-year counts of
every keyword in the set (token occurrences, not distinct keywords), with
grand total T.  A keyword is "special" in year n when k_n/K >= lambda * t_n/T.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Optional

from hanmine.corpus import Corpus, count_occurrences

DEFAULT_LAMBDA = 1.1
TOTAL = "TOTAL"


@dataclass(frozen=True)
class KeywordSet:
    name: str
    keywords: tuple[str, ...]
    notes: dict[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.keywords:
            raise ValueError(f"keyword set {self.name!r} is empty")
        if any(not k for k in self.keywords):
            raise ValueError(f"keyword set {self.name!r} contains an empty keyword")
        if len(set(self.keywords)) != len(self.keywords):
            raise ValueError(f"keyword set {self.name!r} contains duplicates")


@dataclass(frozen=True)
class TrendTable:
    years: tuple[int, ...]
    counts: dict[str, tuple[int, ...]]  # keyword -> k_n per year
    totals: dict[str, int]  # keyword -> K
    baseline: tuple[int, ...]  # t_n per year
    grand_total: int  # T
    missing: tuple[str, ...]  # keywords with K == 0, flagged not failed

    def counts_csv(self) -> str:
        return self._wide_csv(lambda kw, i: str(self.counts[kw][i]), str)

    def ratios_csv(self) -> str:
        def ratio(kw, i):
            k = self.totals[kw]
            return repr(self.counts[kw][i] / k) if k else ""

        return self._wide_csv(ratio, lambda t: repr(t / self.grand_total) if self.grand_total else "")

    def _wide_csv(self, cell, total_cell) -> str:
        keywords = list(self.counts)
        lines = ["year,total," + ",".join(keywords)]
        for i, year in enumerate(self.years):
            row = [str(year), total_cell(self.baseline[i])]
            row += [cell(kw, i) for kw in keywords]
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SpecialYearEntry:
    keyword: str
    year: int
    keyword_share: float  # k_n / K
    baseline_share: float  # t_n / T
    special: bool


@dataclass(frozen=True)
class SpecialYearReport:
    lam: float
    entries: tuple[SpecialYearEntry, ...]

    def special_pairs(self) -> set[tuple[str, int]]:
        return {(e.keyword, e.year) for e in self.entries if e.special}

    def to_json(self) -> str:
        return json.dumps(
            {
                "lambda": self.lam,
                "entries": [
                    {
                        "keyword": e.keyword,
                        "year": e.year,
                        "keyword_share": e.keyword_share,
                        "baseline_share": e.baseline_share,
                        "special": e.special,
                    }
                    for e in self.entries
                ],
            },
            ensure_ascii=False,
        )


def _per_year_counts(
    corpus: Corpus, keywords: Iterable[str], years: tuple[int, ...]
) -> dict[str, tuple[int, ...]]:
    year_pos = {y: i for i, y in enumerate(years)}
    counts: dict[str, tuple[int, ...]] = {}
    for kw in keywords:
        occ = count_occurrences(corpus, kw)
        per_year = [0] * len(years)
        for doc in corpus.documents:
            per_year[year_pos[doc.year]] += len(occ.per_doc[doc.doc_id])
        counts[kw] = tuple(per_year)
    return counts


def build_trend_table(
    corpus: Corpus,
    keyword_set: KeywordSet,
    baseline_set: Optional[KeywordSet] = None,
) -> TrendTable:
    """Count every keyword per year over the corpus year range.

    Years without any keyword occurrence still appear as zero columns, and
    keywords absent from the whole corpus are kept with K = 0 and flagged:
    absences are evidence, not errors.  The baseline t_n defaults to the
    keyword set's own per-year token totals; pass ``baseline_set`` (e.g. a
    broad pseudoword inventory) to normalize against a wider vocabulary.
    """
    if not corpus.has_years:
        raise ValueError("corpus documents carry no years")
    lo = min(d.year for d in corpus.documents)
    hi = max(d.year for d in corpus.documents)
    years = tuple(range(lo, hi + 1))
    counts = _per_year_counts(corpus, keyword_set.keywords, years)
    totals = {kw: sum(c) for kw, c in counts.items()}
    if baseline_set is None:
        base_counts = counts
        base_keywords = keyword_set.keywords
    else:
        base_counts = _per_year_counts(corpus, baseline_set.keywords, years)
        base_keywords = baseline_set.keywords
    baseline = tuple(
        sum(base_counts[kw][i] for kw in base_keywords) for i in range(len(years))
    )
    return TrendTable(
        years=years,
        counts=counts,
        totals=totals,
        baseline=baseline,
        grand_total=sum(baseline),
        missing=tuple(kw for kw, k in totals.items() if k == 0),
    )


def annual_percentage(table: TrendTable, keyword: str = TOTAL) -> list[tuple[int, float]]:
    """Per-year share of a keyword's total (or of the baseline for TOTAL)."""
    if keyword == TOTAL:
        if table.grand_total == 0:
            raise ValueError("baseline is empty: no keyword ever occurs")
        series = table.baseline
        total = table.grand_total
    else:
        if keyword not in table.counts:
            raise KeyError(keyword)
        total = table.totals[keyword]
        if total == 0:
            raise ValueError(f"keyword {keyword!r} never occurs")
        series = table.counts[keyword]
    return [(year, series[i] / total) for i, year in enumerate(table.years)]


def special_years(table: TrendTable, lam: float = DEFAULT_LAMBDA) -> SpecialYearReport:
    """Inclusive test k_n/K >= lam * t_n/T per keyword-year; K=0 keywords skip."""
    if lam <= 0:
        raise ValueError("lambda must be > 0")
    if table.grand_total == 0:
        raise ValueError("baseline is empty: no keyword ever occurs")
    entries = []
    for kw, per_year in table.counts.items():
        k_total = table.totals[kw]
        if k_total == 0:
            continue
        for i, year in enumerate(table.years):
            k_share = per_year[i] / k_total
            t_share = table.baseline[i] / table.grand_total
            entries.append(
                SpecialYearEntry(
                    keyword=kw,
                    year=year,
                    keyword_share=k_share,
                    baseline_share=t_share,
                    special=k_share >= lam * t_share,
                )
            )
    return SpecialYearReport(lam=lam, entries=tuple(entries))
