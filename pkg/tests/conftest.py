import json
import random
from pathlib import Path

import pytest

from hanmine.corpus import Corpus, Document, ingest_corpus
from hanmine.freqstrings import build_index

FIXTURES = Path(__file__).parent / "fixtures"

# One verdict line per acceptance criterion, echoed in the terminal summary
# so the PASS lines survive pytest's capture of passing-test stdout.
CRITERION_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERION_LINES):
            terminalreporter.write_line(line)

# 50-symbol CJK alphabet for synthetic corpora; normalization keeps them all.
ALPHABET = [chr(0x4E00 + i) for i in range(50)]


@pytest.fixture(scope="session")
def drc_corpus():
    return ingest_corpus(FIXTURES / "drc.jsonl")


@pytest.fixture(scope="session")
def drc_index(drc_corpus):
    return build_index(drc_corpus)


def make_doc(doc_id, text, year=None, segment_index=None, title="", author=""):
    return Document(
        doc_id=doc_id,
        title=title,
        author=author,
        text=text,
        raw_length=len(text),
        year=year,
        segment_index=segment_index,
    )


def random_dated_corpus(seed, n_docs=8, doc_len=250, years=(1904, 1908), alphabet=None):
    rng = random.Random(seed)
    alphabet = alphabet or ALPHABET
    docs = []
    for i in range(n_docs):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, doc_len)))
        docs.append(make_doc(f"d{i:03d}", text, year=rng.randint(*years)))
    return Corpus(name=f"rand-{seed}", documents=tuple(docs))


def random_chaptered_corpus(seed, n_docs=8, doc_len=250, alphabet=None):
    rng = random.Random(seed)
    alphabet = alphabet or ALPHABET
    docs = []
    for i in range(n_docs):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, doc_len)))
        docs.append(make_doc(f"c{i:03d}", text, segment_index=i + 1))
    return Corpus(name=f"chap-{seed}", documents=tuple(docs))


def write_manifest(root: Path, rows, name="toy.jsonl"):
    """Write text files and a JSON-lines manifest under root; return its path.

    Each row is (doc_id, text, extra-fields dict).
    """
    lines = []
    for doc_id, text, extra in rows:
        fname = f"{doc_id}.txt"
        (root / fname).write_text(text, encoding="utf-8")
        lines.append(json.dumps({"doc_id": doc_id, "file": fname, **extra}, ensure_ascii=False))
    manifest = root / name
    manifest.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return manifest


@pytest.fixture()
def toy_dated_manifest(tmp_path):
    rows = [
        ("t1904", "改官制者三請立憲之詔官制既定", {"year": 1904, "title": "甲", "author": "張"}),
        ("t1905", "預備立憲先改官制云云", {"year": 1905, "title": "乙", "author": "李"}),
        ("t1906", "官制官制官制立憲", {"year": 1906, "title": "丙", "author": "張"}),
        ("t1907", "立憲立憲立憲立憲官制", {"year": 1907, "title": "丁", "author": "王"}),
    ]
    return write_manifest(tmp_path, rows)
