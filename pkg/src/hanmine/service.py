"""HTTP JSON API over a project: every analysis, versioned under /api/v1/.

The service is a thin adapter: endpoints call the analysis modules on
immutable per-corpus indexes built once at startup, so responses are
deterministic for identical state and query.  The keyword-set store is the
only mutable state and all writes go through a single lock.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse

from hanmine.collocations import CollocationSpec, collocation_trend, window_sweep
from hanmine.corpus import Corpus, concordance, ingest_corpus
from hanmine.freqstrings import (
    DEFAULT_MAX_LEN,
    DEFAULT_MIN_FREQ,
    PseudowordTable,
    SuffixIndex,
    annotate_doc_frequencies,
    build_index,
    extract_pseudowords,
)
from hanmine.narrative import (
    conditional_ratio,
    normalized_frequencies,
    segment_frequencies,
    segment_lengths,
)
from hanmine.project import Project, load_project, save_project
from hanmine.ranking import rank_documents
from hanmine.trends import (
    DEFAULT_LAMBDA,
    KeywordSet,
    build_trend_table,
    special_years,
)
from hanmine.zipf import fit_powerlaw, rank_frequency


class ApiError(Exception):
    def __init__(self, status: int, message: str) -> None:
        super().__init__(message)
        self.status = status
        self.message = message


@dataclass(frozen=True)
class CorpusState:
    corpus: Corpus
    index: SuffixIndex
    table: PseudowordTable


class AppState:
    """Immutable corpora/indexes plus the lone mutable keyword-set store."""

    def __init__(
        self,
        project: Project,
        corpora: dict[str, CorpusState],
        project_path: Optional[Path] = None,
    ) -> None:
        self.project = project
        self.corpora = corpora
        self.project_path = project_path
        self.keyword_sets: dict[str, KeywordSet] = dict(project.keyword_sets)
        self._write_lock = threading.Lock()

    def corpus_state(self, name: str) -> CorpusState:
        try:
            return self.corpora[name]
        except KeyError:
            raise ApiError(404, f"unknown corpus {name!r}") from None

    def keyword_set(self, name: str) -> KeywordSet:
        try:
            return self.keyword_sets[name]
        except KeyError:
            raise ApiError(404, f"unknown keyword set {name!r}") from None

    def put_keyword_set(self, ks: KeywordSet) -> None:
        with self._write_lock:
            self.keyword_sets[ks.name] = ks
            self._persist()

    def delete_keyword_set(self, name: str) -> None:
        with self._write_lock:
            if name not in self.keyword_sets:
                raise ApiError(404, f"unknown keyword set {name!r}")
            del self.keyword_sets[name]
            self._persist()

    def _persist(self) -> None:
        if self.project_path is None:
            return
        project = Project(
            name=self.project.name,
            corpora=self.project.corpora,
            keyword_sets=dict(self.keyword_sets),
            config=self.project.config,
        )
        save_project(project, self.project_path)
        self.project = project


def build_state(
    project: Project,
    project_path: Optional[Path] = None,
    min_freq: int = DEFAULT_MIN_FREQ,
    max_len: int = DEFAULT_MAX_LEN,
) -> AppState:
    """Ingest every registered corpus and build its index and pseudoword table."""
    corpora: dict[str, CorpusState] = {}
    for name, ref in project.corpora.items():
        manifest = Path(ref.manifest)
        if not manifest.is_absolute() and project_path is not None:
            manifest = project_path.parent / manifest
        corpus = ingest_corpus(manifest, ref.policy, name=name)
        index = build_index(corpus)
        table = annotate_doc_frequencies(
            index, extract_pseudowords(index, min_freq=min_freq, max_len=max_len)
        )
        corpora[name] = CorpusState(corpus=corpus, index=index, table=table)
    return AppState(project, corpora, project_path)


def _keyword_set_json(ks: KeywordSet) -> dict:
    return {"name": ks.name, "keywords": list(ks.keywords), "notes": ks.notes}


def _series_json(series) -> dict:
    return {
        "kind": series.kind,
        "segments": list(series.segments),
        "values": list(series.values),
    }


def create_app(state: AppState) -> FastAPI:
    app = FastAPI(title="hanmine", docs_url=None, redoc_url=None)

    @app.exception_handler(ApiError)
    async def _api_error(_: Request, exc: ApiError) -> JSONResponse:
        return JSONResponse(status_code=exc.status, content={"error": exc.message})

    @app.exception_handler(ValueError)
    async def _value_error(_: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"error": str(exc)})

    @app.get("/api/v1/corpora")
    def list_corpora() -> list[dict]:
        out = []
        for name in sorted(state.corpora):
            cs = state.corpora[name]
            out.append(
                {
                    "name": name,
                    "doc_count": cs.corpus.doc_count,
                    "total_chars": cs.corpus.total_chars,
                    "distinct_chars": cs.corpus.distinct_chars,
                    "pseudowords": len(cs.table.entries),
                    "axis": "year" if cs.corpus.has_years else "segment",
                }
            )
        return out

    @app.get("/api/v1/corpora/{name}/pseudowords")
    def pseudowords(
        name: str,
        response: Response,
        page: int = 1,
        page_size: int = 50,
        min_freq: int = 0,
        min_len: int = 0,
        max_len: int = 0,
        q: str = "",
    ) -> list[dict]:
        if page < 1 or page_size < 1:
            raise ApiError(400, "page and page_size must be >= 1")
        cs = state.corpus_state(name)
        rows = [
            e
            for e in cs.table.entries
            if e.total_freq >= min_freq
            and e.length >= min_len
            and (max_len == 0 or e.length <= max_len)
            and (not q or q in e.string)
        ]
        response.headers["X-Total-Count"] = str(len(rows))
        lo = (page - 1) * page_size
        return [
            {
                "string": e.string,
                "length": e.length,
                "total_freq": e.total_freq,
                "doc_freq": e.doc_freq,
            }
            for e in rows[lo:lo + page_size]
        ]

    @app.get("/api/v1/keyword-sets")
    def list_keyword_sets() -> list[dict]:
        return [_keyword_set_json(state.keyword_sets[n]) for n in sorted(state.keyword_sets)]

    @app.get("/api/v1/keyword-sets/{name}")
    def get_keyword_set(name: str) -> dict:
        return _keyword_set_json(state.keyword_set(name))

    @app.put("/api/v1/keyword-sets/{name}")
    def put_keyword_set(name: str, body: dict) -> dict:
        keywords = body.get("keywords")
        if not isinstance(keywords, list):
            raise ApiError(400, "body must carry a 'keywords' list")
        ks = KeywordSet(
            name=name,
            keywords=tuple(str(k) for k in keywords),
            notes={str(k): str(v) for k, v in body.get("notes", {}).items()},
        )
        state.put_keyword_set(ks)
        return _keyword_set_json(ks)

    @app.delete("/api/v1/keyword-sets/{name}")
    def delete_keyword_set(name: str) -> dict:
        state.delete_keyword_set(name)
        return {"deleted": name}

    @app.get("/api/v1/corpora/{name}/trends")
    def trends(name: str, set: str, lam: float = DEFAULT_LAMBDA) -> dict:
        cs = state.corpus_state(name)
        ks = state.keyword_set(set)
        table = build_trend_table(cs.corpus, ks)
        report = special_years(table, lam=lam)
        return {
            "years": list(table.years),
            "counts": {kw: list(c) for kw, c in table.counts.items()},
            "totals": table.totals,
            "baseline": list(table.baseline),
            "grand_total": table.grand_total,
            "missing": list(table.missing),
            # Shares are served so clients never divide: k_n/K per keyword
            # (null series when K = 0) and t_n/T for the baseline.
            "shares": {
                kw: ([c / table.totals[kw] for c in counts] if table.totals[kw] else None)
                for kw, counts in table.counts.items()
            },
            "baseline_shares": (
                [t / table.grand_total for t in table.baseline]
                if table.grand_total
                else None
            ),
            "lambda": lam,
            "special": [
                {
                    "keyword": e.keyword,
                    "year": e.year,
                    "keyword_share": e.keyword_share,
                    "baseline_share": e.baseline_share,
                }
                for e in report.entries
                if e.special
            ],
        }

    @app.get("/api/v1/corpora/{name}/special-years")
    def special_year_report(name: str, set: str, lam: float = DEFAULT_LAMBDA) -> dict:
        cs = state.corpus_state(name)
        ks = state.keyword_set(set)
        report = special_years(build_trend_table(cs.corpus, ks), lam=lam)
        return {
            "lambda": lam,
            "special": [
                {
                    "keyword": e.keyword,
                    "year": e.year,
                    "keyword_share": e.keyword_share,
                    "baseline_share": e.baseline_share,
                }
                for e in report.entries
                if e.special
            ],
        }

    @app.get("/api/v1/corpora/{name}/collocations")
    def collocations(name: str, a: str, b: str, window: int = 30) -> dict:
        cs = state.corpus_state(name)
        series = collocation_trend(cs.corpus, CollocationSpec(a, b, window=window))
        return {
            "a": a,
            "b": b,
            "window": window,
            "years": list(series.years),
            "counts": list(series.counts),
            "ratios": series.ratios(),
            "total": series.total,
        }

    @app.get("/api/v1/corpora/{name}/collocations/sweep")
    def collocation_sweep(name: str, a: str, b: str, windows: str = "10,20,30") -> dict:
        cs = state.corpus_state(name)
        try:
            ws = [int(w) for w in windows.split(",") if w.strip()]
        except ValueError:
            raise ApiError(400, f"bad windows list {windows!r}") from None
        series_list = window_sweep(cs.corpus, a, b, ws)
        return {
            "a": a,
            "b": b,
            "windows": ws,
            "series": [
                {
                    "window": s.spec.window,
                    "years": list(s.years),
                    "counts": list(s.counts),
                    "total": s.total,
                }
                for s in series_list
            ],
        }

    @app.get("/api/v1/corpora/{name}/ranking")
    def ranking(
        name: str, set: str, scheme: str = "tf_sum", year: Optional[int] = None
    ) -> list[dict]:
        cs = state.corpus_state(name)
        ks = state.keyword_set(set)
        ranked = rank_documents(cs.corpus, ks, scheme=scheme, year=year)
        return [
            {
                "rank": i,
                "doc_id": r.doc_id,
                "weight": r.weight,
                "year": r.year,
                "segment_index": r.segment_index,
                "author": r.author,
                "title": r.title,
                "breakdown": r.breakdown,
            }
            for i, r in enumerate(ranked, 1)
        ]

    @app.get("/api/v1/corpora/{name}/concordance")
    def concord(name: str, pattern: str, context: int = 10, limit: int = 200) -> list[dict]:
        cs = state.corpus_state(name)
        rows = concordance(cs.corpus, pattern, context)
        return [
            {
                "doc_id": r.doc_id,
                "position": r.position,
                "left": r.left,
                "match": r.match,
                "right": r.right,
            }
            for r in rows[:limit]
        ]

    @app.get("/api/v1/corpora/{name}/narrative")
    def narrative(name: str, pattern: str, event: str = "") -> dict:
        cs = state.corpus_state(name)
        if not cs.corpus.has_segments:
            raise ApiError(400, f"corpus {name!r} is not chaptered")
        freqs = segment_frequencies(cs.corpus, pattern)
        lengths = segment_lengths(cs.corpus)
        out = {
            "pattern": pattern,
            "raw_freq": _series_json(freqs),
            "length": _series_json(lengths),
            "normalized": _series_json(normalized_frequencies(freqs, lengths)),
        }
        if event:
            out["event"] = event
            out["event_freq"] = _series_json(segment_frequencies(cs.corpus, event))
            out["ratio"] = _series_json(conditional_ratio(cs.corpus, pattern, event))
        return out

    @app.get("/api/v1/corpora/{name}/zipf")
    def zipf(
        name: str,
        normalize: bool = False,
        rank_lo: int = 0,
        rank_hi: int = 0,
    ) -> dict:
        cs = state.corpus_state(name)
        curve = rank_frequency(
            cs.table, normalize=normalize, corpus_size=cs.corpus.total_chars
        )
        rank_range = (rank_lo, rank_hi) if rank_lo and rank_hi else None
        fit = fit_powerlaw(curve, rank_range) if len(curve.points) >= 2 else None
        return {
            "normalized": normalize,
            "points": [
                {
                    "rank": p.rank,
                    "freq": p.freq,
                    "value": p.value,
                    "log_rank": p.log_rank,
                    "log_value": p.log_value,
                }
                for p in curve.points
            ],
            "fit": None
            if fit is None
            else {
                "slope": fit.slope,
                "intercept": fit.intercept,
                "r_squared": fit.r_squared,
                "rank_lo": fit.rank_lo,
                "rank_hi": fit.rank_hi,
            },
        }

    return app


def serve(project_path: str | Path, host: str = "127.0.0.1", port: int = 8450) -> None:
    """Load a project, build all indexes, and block serving the API."""
    import uvicorn

    path = Path(project_path)
    project = load_project(path)
    state = build_state(project, project_path=path)
    uvicorn.run(create_app(state), host=host, port=port, log_level="warning")
