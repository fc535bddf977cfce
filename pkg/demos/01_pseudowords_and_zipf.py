"""Extract frequent strings from the bundled chaptered corpus and check that
their rank-frequency curve is close to a straight line in log-log space.

Run from the repository root:  python3 demos/01_pseudowords_and_zipf.py
"""

from pathlib import Path

from hanmine import (
    annotate_doc_frequencies,
    build_index,
    extract_pseudowords,
    fit_powerlaw,
    ingest_corpus,
    rank_frequency,
)

MANIFEST = Path(__file__).parent.parent / "tests" / "fixtures" / "drc.jsonl"


def main() -> None:
    corpus = ingest_corpus(MANIFEST)
    print(f"{corpus.name}: {corpus.doc_count} chapters, "
          f"{corpus.total_chars:,} characters, {corpus.distinct_chars:,} distinct")

    index = build_index(corpus)
    table = annotate_doc_frequencies(index, extract_pseudowords(index))
    print(f"\n{len(table.entries):,} strings occur at least {table.min_freq} times.")
    print("\nTop 15 by frequency:")
    print(f"{'string':<10}{'len':>4}{'freq':>8}{'docs':>6}")
    for e in table.entries[:15]:
        print(f"{e.string:<10}{e.length:>4}{e.total_freq:>8}{e.doc_freq:>6}")

    print("\nTop multi-character strings (the interesting 'pseudowords'):")
    for e in [e for e in table.entries if e.length >= 2][:15]:
        print(f"{e.string:<10}{e.length:>4}{e.total_freq:>8}{e.doc_freq:>6}")

    curve = rank_frequency(table)
    fit = fit_powerlaw(curve, rank_range=(10, 1000))
    print(f"\nPower-law fit over ranks 10..1000: "
          f"slope {fit.slope:.3f}, r^2 {fit.r_squared:.4f}")
    print("A slope near -1 with high r^2 is the classic Zipf signature.")


if __name__ == "__main__":
    main()
