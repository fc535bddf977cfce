import json

import pytest

from hanmine.cli import main

from .conftest import FIXTURES, write_manifest


@pytest.fixture()
def chaptered_manifest(tmp_path):
    rows = [
        ("c1", "甲乙丙甲乙甲", {"segment_index": 1}),
        ("c2", "甲乙乙乙丙丁", {"segment_index": 2}),
    ]
    return write_manifest(tmp_path, rows, name="chap.jsonl")


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def test_ingest_csv(capsys, toy_dated_manifest):
    code, out = run(capsys, "ingest", toy_dated_manifest)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "doc_id,title,author,year,segment_index,chars,raw_length"
    assert len(lines) == 5
    assert lines[1].startswith("t1904,甲,張,1904,,")


def test_ingest_json(capsys, toy_dated_manifest):
    code, out = run(capsys, "ingest", toy_dated_manifest, "--out", "json")
    data = json.loads(out)
    assert code == 0
    assert [d["doc_id"] for d in data["documents"]] == ["t1904", "t1905", "t1906", "t1907"]


def test_stats(capsys, toy_dated_manifest):
    code, out = run(capsys, "stats", toy_dated_manifest, "--min-freq", 2)
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "name,pseudowords,total_chars,distinct_chars,doc_count"
    assert lines[1].endswith(",4")


def test_pseudowords_csv_and_json_agree(capsys, toy_dated_manifest):
    _, csv_out = run(capsys, "pseudowords", toy_dated_manifest, "--min-freq", 2)
    _, json_out = run(
        capsys, "pseudowords", toy_dated_manifest, "--min-freq", 2, "--out", "json"
    )
    rows = json.loads(json_out)
    lines = csv_out.splitlines()
    assert lines[0] == "string,length,total_freq,doc_freq"
    assert len(lines) == len(rows) + 1
    assert lines[1].split(",")[0] == rows[0]["string"]


def test_zipf(capsys, toy_dated_manifest):
    code, out = run(
        capsys, "zipf", toy_dated_manifest, "--min-freq", 2, "--out", "json"
    )
    data = json.loads(out)
    assert code == 0
    assert data["points"][0]["rank"] == 1
    assert data["fit"] is None or "slope" in data["fit"]


def test_trends(capsys, toy_dated_manifest):
    code, out = run(capsys, "trends", toy_dated_manifest, "--keywords", "官制,立憲")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "year,total,官制,立憲"
    code, out = run(
        capsys, "trends", toy_dated_manifest, "--keywords", "官制,立憲", "--out", "json"
    )
    data = json.loads(out)
    assert sum(data["baseline"]) == data["grand_total"]


def test_collocate(capsys, toy_dated_manifest):
    code, out = run(
        capsys, "collocate", toy_dated_manifest, "--a", "官制", "--b", "立憲"
    )
    assert code == 0
    assert out.splitlines()[0] == "year,count,ratio"
    code, out = run(
        capsys,
        "collocate", toy_dated_manifest,
        "--a", "官制", "--b", "立憲", "--sweep", "10,20,30", "--out", "json",
    )
    totals = [s["total"] for s in json.loads(out)]
    assert totals == sorted(totals)


def test_rank(capsys, toy_dated_manifest):
    code, out = run(capsys, "rank", toy_dated_manifest, "--keywords", "官制")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "rank,weight,doc_id,year,author,title"
    weights = [float(l.split(",")[1]) for l in lines[1:]]
    assert weights == sorted(weights, reverse=True)


def test_narrative(capsys, chaptered_manifest):
    code, out = run(
        capsys, "narrative", chaptered_manifest, "--pattern", "甲", "--event", "甲乙"
    )
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "segment,f,l,f_over_l,s,m,ratio"
    assert len(lines) == 3


def test_concord(capsys, chaptered_manifest):
    code, out = run(
        capsys, "concord", chaptered_manifest, "--pattern", "乙", "--context", "2",
        "--out", "json",
    )
    rows = json.loads(out)
    assert code == 0
    assert all(r["match"] == "乙" for r in rows)


def test_errors_exit_nonzero(capsys, toy_dated_manifest, tmp_path):
    code, _ = run(capsys, "ingest", tmp_path / "absent.jsonl")
    assert code == 1
    code, _ = run(capsys, "narrative", toy_dated_manifest, "--pattern", "甲")
    assert code == 1  # dated corpus has no chapters


def test_output_deterministic(capsys):
    _, first = run(capsys, "pseudowords", FIXTURES / "drc.jsonl", "--min-freq", 1000)
    _, second = run(capsys, "pseudowords", FIXTURES / "drc.jsonl", "--min-freq", 1000)
    assert first == second
