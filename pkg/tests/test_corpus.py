import json

import pytest
from hypothesis import given, strategies as st

from hanmine.corpus import (
    IngestError,
    NormalizationPolicy,
    concordance,
    corpus_stats,
    count_occurrences,
    find_all,
    ingest_corpus,
)

from .conftest import make_doc, write_manifest
from hanmine.corpus import Corpus


def test_default_policy_strips_ascii_whitespace_punct():
    policy = NormalizationPolicy()
    assert policy.normalize("清末 abc 立憲。\n「新政」!") == "清末立憲新政"


def test_identity_case():
    policy = NormalizationPolicy()
    assert policy.normalize("清末立憲") == "清末立憲"


def test_custom_keep_wins_over_drop_rules():
    policy = NormalizationPolicy(custom_keep=frozenset("a"))
    assert policy.normalize("a b c") == "a"


def test_custom_drop_applies_last():
    policy = NormalizationPolicy(custom_drop=frozenset("立"))
    assert policy.normalize("立憲") == "憲"


@given(st.text(max_size=200))
def test_normalization_idempotent(text):
    policy = NormalizationPolicy()
    once = policy.normalize(text)
    assert policy.normalize(once) == once


def test_ingest_toy_manifest(toy_dated_manifest):
    corpus = ingest_corpus(toy_dated_manifest)
    assert corpus.doc_count == 4
    assert corpus.has_years and not corpus.has_segments
    assert corpus["t1906"].text == "官制官制官制立憲"
    assert corpus.total_chars == sum(len(d.text) for d in corpus.documents)


def test_ingest_errors_name_the_row(tmp_path):
    manifest = tmp_path / "bad.jsonl"
    manifest.write_text('{"doc_id": "a"}\n', encoding="utf-8")
    with pytest.raises(IngestError, match="bad.jsonl:1"):
        ingest_corpus(manifest)


def test_ingest_rejects_malformed_json(tmp_path):
    manifest = tmp_path / "bad.jsonl"
    manifest.write_text("{not json}\n", encoding="utf-8")
    with pytest.raises(IngestError, match="malformed"):
        ingest_corpus(manifest)


def test_ingest_rejects_duplicate_doc_id(tmp_path):
    rows = [("a", "甲甲", {"year": 1900})]
    manifest = write_manifest(tmp_path, rows)
    line = manifest.read_text(encoding="utf-8")
    manifest.write_text(line + line, encoding="utf-8")
    with pytest.raises(IngestError, match="duplicate"):
        ingest_corpus(manifest)


def test_ingest_rejects_missing_file(tmp_path):
    manifest = tmp_path / "m.jsonl"
    manifest.write_text(
        json.dumps({"doc_id": "a", "file": "nope.txt", "year": 1900}) + "\n",
        encoding="utf-8",
    )
    with pytest.raises(IngestError, match="not found"):
        ingest_corpus(manifest)


def test_ingest_rejects_empty_after_normalization(tmp_path):
    manifest = write_manifest(tmp_path, [("a", "abc 123", {"year": 1900})])
    with pytest.raises(IngestError, match="empty after normalization"):
        ingest_corpus(manifest)


def test_ingest_rejects_both_time_axes(tmp_path):
    manifest = write_manifest(
        tmp_path, [("a", "甲甲", {"year": 1900, "segment_index": 1})]
    )
    with pytest.raises(IngestError, match="exactly one"):
        ingest_corpus(manifest)


def test_corpus_rejects_mixed_axes():
    with pytest.raises(IngestError, match="mix"):
        Corpus(
            name="x",
            documents=(make_doc("a", "甲", year=1900), make_doc("b", "乙", segment_index=1)),
        )


def test_find_all_overlapping():
    assert find_all("aaaa", "aa") == [0, 1, 2]
    assert find_all("abcabc", "abc") == [0, 3]
    assert find_all("abc", "x") == []


def test_count_occurrences_never_crosses_documents():
    corpus = Corpus(
        name="x",
        documents=(make_doc("a", "甲乙", year=1900), make_doc("b", "乙甲", year=1900)),
    )
    assert count_occurrences(corpus, "乙乙").total == 0
    assert count_occurrences(corpus, "甲").total == 2


def test_concordance_clips_at_edges():
    corpus = Corpus(name="x", documents=(make_doc("a", "甲乙丙丁戊", year=1900),))
    rows = concordance(corpus, "甲", context=3)
    assert rows[0].left == "" and rows[0].match == "甲" and rows[0].right == "乙丙丁"
    rows = concordance(corpus, "戊", context=3)
    assert rows[0].left == "乙丙丁" and rows[0].right == ""


def test_corpus_stats_counts():
    corpus = Corpus(
        name="x",
        documents=(make_doc("a", "甲乙甲", year=1900), make_doc("b", "丙", year=1901)),
    )
    stats = corpus_stats(corpus)
    assert (stats.total_chars, stats.distinct_chars, stats.doc_count) == (4, 3, 2)
    assert stats.pseudowords == 0
