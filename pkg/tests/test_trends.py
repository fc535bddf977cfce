import random

import pytest

from hanmine.corpus import ingest_corpus
from hanmine.trends import (
    KeywordSet,
    annual_percentage,
    build_trend_table,
    special_years,
)

from .conftest import ALPHABET, random_chaptered_corpus, random_dated_corpus


def random_keyword_set(seed, alphabet=None):
    rng = random.Random(seed)
    alphabet = alphabet or ALPHABET[:6]
    keywords = set()
    while len(keywords) < rng.randint(2, 5):
        keywords.add("".join(rng.choice(alphabet) for _ in range(rng.randint(1, 2))))
    return KeywordSet(name=f"ks-{seed}", keywords=tuple(sorted(keywords)))


def test_keyword_set_validation():
    with pytest.raises(ValueError):
        KeywordSet(name="x", keywords=())
    with pytest.raises(ValueError):
        KeywordSet(name="x", keywords=("a", ""))
    with pytest.raises(ValueError):
        KeywordSet(name="x", keywords=("a", "a"))


@pytest.mark.parametrize("seed", range(10))
def test_eq3_identities(seed):
    corpus = random_dated_corpus(seed, alphabet=ALPHABET[:6])
    table = build_trend_table(corpus, random_keyword_set(seed))
    for kw, per_year in table.counts.items():
        assert sum(per_year) == table.totals[kw]
    assert sum(table.baseline) == table.grand_total
    assert table.baseline == tuple(
        sum(table.counts[kw][i] for kw in table.counts) for i in range(len(table.years))
    )


def test_year_range_is_inclusive_with_zero_columns():
    corpus = random_dated_corpus(0, years=(1900, 1910))
    table = build_trend_table(corpus, random_keyword_set(0))
    lo = min(d.year for d in corpus.documents)
    hi = max(d.year for d in corpus.documents)
    assert table.years == tuple(range(lo, hi + 1))


def test_missing_keywords_flagged_not_failed():
    corpus = random_dated_corpus(1, alphabet=ALPHABET[:3])
    ks = KeywordSet(name="x", keywords=(ALPHABET[0], "查無此詞"))
    table = build_trend_table(corpus, ks)
    assert table.missing == ("查無此詞",)
    assert table.totals["查無此詞"] == 0


def test_annual_percentages_sum_to_one():
    corpus = random_dated_corpus(4, alphabet=ALPHABET[:4])
    table = build_trend_table(corpus, random_keyword_set(4, alphabet=ALPHABET[:4]))
    for kw in list(table.counts) + ["TOTAL"]:
        if kw != "TOTAL" and table.totals[kw] == 0:
            continue
        shares = annual_percentage(table, kw)
        assert abs(sum(v for _, v in shares) - 1.0) < 1e-9


def test_special_years_monotone_in_lambda():
    for seed in range(5):
        corpus = random_dated_corpus(seed, alphabet=ALPHABET[:5])
        table = build_trend_table(corpus, random_keyword_set(seed, ALPHABET[:5]))
        if table.grand_total == 0:
            continue
        grid = [1.0, 1.1, 1.5, 2.0]
        reports = [special_years(table, lam).special_pairs() for lam in grid]
        for smaller, larger in zip(reports[1:], reports):
            assert smaller <= larger


def test_special_years_inclusive_boundary():
    # One keyword, one year: share 1.0 vs baseline share 1.0, lambda=1 → special.
    corpus = random_dated_corpus(2, n_docs=3, years=(1905, 1905), alphabet=ALPHABET[:2])
    ks = KeywordSet(name="x", keywords=(ALPHABET[0],))
    table = build_trend_table(corpus, ks)
    report = special_years(table, lam=1.0)
    assert (ALPHABET[0], 1905) in report.special_pairs()
    assert special_years(table, lam=1.0001).special_pairs() == set()


def test_special_years_rejects_bad_lambda():
    corpus = random_dated_corpus(3, alphabet=ALPHABET[:3])
    table = build_trend_table(corpus, KeywordSet(name="x", keywords=(ALPHABET[0],)))
    with pytest.raises(ValueError):
        special_years(table, lam=0)


def test_trend_table_requires_years():
    corpus = random_chaptered_corpus(0)
    with pytest.raises(ValueError, match="no years"):
        build_trend_table(corpus, KeywordSet(name="x", keywords=(ALPHABET[0],)))


def test_baseline_set_overrides_totals():
    corpus = random_dated_corpus(5, alphabet=ALPHABET[:4])
    ks = KeywordSet(name="x", keywords=(ALPHABET[0],))
    broad = KeywordSet(name="broad", keywords=tuple(ALPHABET[:4]))
    table = build_trend_table(corpus, ks, baseline_set=broad)
    wide = build_trend_table(corpus, broad)
    assert table.baseline == wide.baseline
    assert table.counts[ALPHABET[0]] == wide.counts[ALPHABET[0]]


def test_counts_csv_wide_format(toy_dated_manifest):
    corpus = ingest_corpus(toy_dated_manifest)
    ks = KeywordSet(name="reform", keywords=("官制", "立憲"))
    table = build_trend_table(corpus, ks)
    lines = table.counts_csv().splitlines()
    assert lines[0] == "year,total,官制,立憲"
    assert len(lines) == 1 + len(table.years)
    # 1906 doc is 官制官制官制立憲 → 3 + 1 occurrences.
    row_1906 = dict(zip(lines[0].split(","), lines[3].split(",")))
    assert row_1906 == {"year": "1906", "total": "4", "官制": "3", "立憲": "1"}
