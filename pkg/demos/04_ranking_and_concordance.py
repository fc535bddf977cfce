"""Rank chapters of the bundled novel by keyword weight, then read the
matches in context (KWIC concordance).

Run from the repository root:  python3 demos/04_ranking_and_concordance.py
"""

from pathlib import Path

from hanmine import KeywordSet, concordance, ingest_corpus, rank_documents

MANIFEST = Path(__file__).parent.parent / "tests" / "fixtures" / "drc.jsonl"


def main() -> None:
    corpus = ingest_corpus(MANIFEST)
    ks = KeywordSet(name="daiyu", keywords=("黛玉", "葬花"))

    print("Chapters ranked by total mentions of 黛玉/葬花 (top 10):")
    for i, r in enumerate(rank_documents(corpus, ks)[:10], 1):
        print(f"{i:>3}. {r.doc_id}  weight {int(r.weight):>4}  {r.title}")

    print("\nSame query, length-normalized (density rather than bulk):")
    for i, r in enumerate(rank_documents(corpus, ks, scheme="tf_sum_normalized")[:5], 1):
        print(f"{i:>3}. {r.doc_id}  weight {r.weight:.5f}  {r.title}")

    print("\n葬花 in context:")
    for row in concordance(corpus, "葬花", context=8)[:10]:
        print(f"  {row.doc_id} @{row.position:>6}  …{row.left}【{row.match}】{row.right}…")


if __name__ == "__main__":
    main()
