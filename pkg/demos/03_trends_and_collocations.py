"""Keyword trends, special years, and windowed collocations on a small
synthetic dated corpus built in-line (so the demo is self-contained).

Run from the repository root:  python3 demos/03_trends_and_collocations.py
"""

import json
import tempfile
from pathlib import Path

from hanmine import (
    CollocationSpec,
    KeywordSet,
    build_trend_table,
    collocation_trend,
    ingest_corpus,
    special_years,
    window_sweep,
)

DOCS = [
    (1904, "朝廷議改官制而未決"),
    (1905, "五大臣出洋考察憲政預備立憲之說漸起"),
    (1906, "詔定官制先行釐定官制為立憲之預備官制既定"),
    (1907, "各省請速開國會行立憲之政立憲立憲之聲不絕"),
    (1908, "欽定憲法大綱頒布立憲有期而官制亦再更定"),
]


def main() -> None:
    with tempfile.TemporaryDirectory() as tmp:
        root = Path(tmp)
        lines = []
        for year, text in DOCS:
            (root / f"{year}.txt").write_text(text, encoding="utf-8")
            lines.append(json.dumps(
                {"doc_id": str(year), "title": "", "author": "",
                 "year": year, "file": f"{year}.txt"},
                ensure_ascii=False))
        manifest = root / "corpus.jsonl"
        manifest.write_text("\n".join(lines) + "\n", encoding="utf-8")
        corpus = ingest_corpus(manifest)

    ks = KeywordSet(name="reform", keywords=("官制", "立憲"))
    table = build_trend_table(corpus, ks)

    print("Annual keyword counts:")
    print(table.counts_csv())
    report = special_years(table, lam=1.1)
    print("Special years at lambda = 1.1 (a keyword's share of its own total")
    print("beats 1.1x its share of the baseline):")
    for kw, year in sorted(report.special_pairs()):
        print(f"  {kw} in {year}")

    print("\nCollocation 官制 ~ 立憲, window sweep 5/15/30:")
    for series in window_sweep(corpus, "官制", "立憲", [5, 15, 30]):
        print(f"  W={series.spec.window:>2}: total {series.total}, "
              f"per year {dict(zip(series.years, series.counts))}")
    print("Counts can only grow as the window widens.")


if __name__ == "__main__":
    main()
