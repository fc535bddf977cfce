"""Command-line front end.

Every subcommand reads a JSON-lines corpus manifest (or a project file for
``serve``), runs one analysis, and prints CSV or JSON to stdout with
deterministic ordering.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from hanmine.collocations import (
    DEFAULT_WINDOW,
    CollocationSpec,
    collocation_trend,
    sweep_csv,
    window_sweep,
)
from hanmine.corpus import concordance, corpus_stats, ingest_corpus
from hanmine.freqstrings import (
    DEFAULT_MAX_LEN,
    DEFAULT_MIN_FREQ,
    annotate_doc_frequencies,
    build_index,
    extract_pseudowords,
)
from hanmine.narrative import (
    combined_csv,
    conditional_ratio,
    normalized_frequencies,
    segment_frequencies,
    segment_lengths,
)
from hanmine.ranking import rank_documents, ranking_csv, ranking_json
from hanmine.trends import (
    DEFAULT_LAMBDA,
    KeywordSet,
    build_trend_table,
    special_years,
)
from hanmine.zipf import fit_powerlaw, rank_frequency


def _keyword_set(raw: str) -> KeywordSet:
    return KeywordSet(name="cli", keywords=tuple(k for k in raw.split(",") if k))


def _emit_json(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False))


def _build_table(args):
    corpus = ingest_corpus(args.manifest)
    index = build_index(corpus)
    table = extract_pseudowords(
        index,
        min_freq=args.min_freq,
        min_len=args.min_len,
        max_len=args.max_len,
        maximal_only=args.maximal,
    )
    return corpus, index, table


def cmd_ingest(args) -> None:
    corpus = ingest_corpus(args.manifest)
    rows = [
        {
            "doc_id": d.doc_id,
            "title": d.title,
            "author": d.author,
            "year": d.year,
            "segment_index": d.segment_index,
            "chars": len(d.text),
            "raw_length": d.raw_length,
        }
        for d in corpus.documents
    ]
    if args.out == "json":
        _emit_json({"name": corpus.name, "documents": rows})
    else:
        print("doc_id,title,author,year,segment_index,chars,raw_length")
        for r in rows:
            year = "" if r["year"] is None else r["year"]
            seg = "" if r["segment_index"] is None else r["segment_index"]
            print(
                f"{r['doc_id']},{r['title']},{r['author']},{year},{seg},"
                f"{r['chars']},{r['raw_length']}"
            )


def cmd_stats(args) -> None:
    corpus, _, table = _build_table(args)
    stats = corpus_stats(corpus, table)
    if args.out == "json":
        _emit_json(
            {
                "name": corpus.name,
                "pseudowords": stats.pseudowords,
                "total_chars": stats.total_chars,
                "distinct_chars": stats.distinct_chars,
                "doc_count": stats.doc_count,
            }
        )
    else:
        print("name,pseudowords,total_chars,distinct_chars,doc_count")
        print(
            f"{corpus.name},{stats.pseudowords},{stats.total_chars},"
            f"{stats.distinct_chars},{stats.doc_count}"
        )


def cmd_pseudowords(args) -> None:
    _, index, table = _build_table(args)
    table = annotate_doc_frequencies(index, table)
    if args.out == "json":
        _emit_json(
            [
                {
                    "string": e.string,
                    "length": e.length,
                    "total_freq": e.total_freq,
                    "doc_freq": e.doc_freq,
                }
                for e in table.entries
            ]
        )
    else:
        sys.stdout.write(table.to_csv())


def cmd_zipf(args) -> None:
    corpus, _, table = _build_table(args)
    curve = rank_frequency(
        table, normalize=args.normalize, corpus_size=corpus.total_chars
    )
    fit = None
    if len(curve.points) >= 2:
        rank_range = None
        if args.fit:
            lo, hi = args.fit.split(":", 1)
            rank_range = (int(lo), int(hi))
        fit = fit_powerlaw(curve, rank_range)
    if args.out == "json":
        _emit_json(
            {
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
                "fit": None if fit is None else json.loads(fit.to_json()),
            }
        )
    else:
        sys.stdout.write(curve.to_csv())


def cmd_trends(args) -> None:
    corpus = ingest_corpus(args.manifest)
    ks = _keyword_set(args.keywords)
    table = build_trend_table(corpus, ks)
    if args.out == "json":
        report = special_years(table, lam=args.lam)
        _emit_json(
            {
                "years": list(table.years),
                "counts": {kw: list(c) for kw, c in table.counts.items()},
                "totals": table.totals,
                "baseline": list(table.baseline),
                "grand_total": table.grand_total,
                "missing": list(table.missing),
                "special": sorted(report.special_pairs()),
            }
        )
    else:
        sys.stdout.write(table.ratios_csv() if args.ratios else table.counts_csv())


def cmd_collocate(args) -> None:
    corpus = ingest_corpus(args.manifest)
    if args.sweep:
        windows = [int(w) for w in args.sweep.split(",") if w]
        series_list = window_sweep(corpus, args.a, args.b, windows)
        if args.out == "json":
            _emit_json(
                [
                    {
                        "window": s.spec.window,
                        "years": list(s.years),
                        "counts": list(s.counts),
                        "total": s.total,
                    }
                    for s in series_list
                ]
            )
        else:
            sys.stdout.write(sweep_csv(series_list))
        return
    series = collocation_trend(
        corpus, CollocationSpec(args.a, args.b, window=args.window)
    )
    if args.out == "json":
        _emit_json(
            {
                "window": series.spec.window,
                "years": list(series.years),
                "counts": list(series.counts),
                "ratios": series.ratios(),
                "total": series.total,
            }
        )
    else:
        sys.stdout.write(series.to_csv())


def cmd_rank(args) -> None:
    corpus = ingest_corpus(args.manifest)
    ranked = rank_documents(
        corpus, _keyword_set(args.keywords), scheme=args.scheme, year=args.year
    )
    if args.out == "json":
        print(ranking_json(ranked))
    else:
        sys.stdout.write(ranking_csv(ranked))


def cmd_narrative(args) -> None:
    corpus = ingest_corpus(args.manifest)
    if args.event:
        if args.out == "json":
            freqs = segment_frequencies(corpus, args.pattern)
            lengths = segment_lengths(corpus)
            ratio = conditional_ratio(corpus, args.pattern, args.event)
            _emit_json(
                {
                    "segments": list(freqs.segments),
                    "f": list(freqs.values),
                    "l": list(lengths.values),
                    "normalized": list(
                        normalized_frequencies(freqs, lengths).values
                    ),
                    "s": list(segment_frequencies(corpus, args.event).values),
                    "ratio": list(ratio.values),
                }
            )
        else:
            sys.stdout.write(combined_csv(corpus, args.pattern, args.event))
        return
    freqs = segment_frequencies(corpus, args.pattern)
    lengths = segment_lengths(corpus)
    normalized = normalized_frequencies(freqs, lengths)
    if args.out == "json":
        _emit_json(
            {
                "segments": list(freqs.segments),
                "f": list(freqs.values),
                "l": list(lengths.values),
                "normalized": list(normalized.values),
            }
        )
    else:
        sys.stdout.write(normalized.to_csv())


def cmd_concord(args) -> None:
    corpus = ingest_corpus(args.manifest)
    rows = concordance(corpus, args.pattern, args.context)
    if args.out == "json":
        _emit_json(
            [
                {
                    "doc_id": r.doc_id,
                    "position": r.position,
                    "left": r.left,
                    "match": r.match,
                    "right": r.right,
                }
                for r in rows
            ]
        )
    else:
        print("doc_id,position,left,match,right")
        for r in rows:
            print(f"{r.doc_id},{r.position},{r.left},{r.match},{r.right}")


def cmd_serve(args) -> None:
    from hanmine.service import serve

    serve(args.project, host=args.host, port=args.port)


def _add_extraction_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--min-freq", type=int, default=DEFAULT_MIN_FREQ)
    p.add_argument("--min-len", type=int, default=1)
    p.add_argument("--max-len", type=int, default=DEFAULT_MAX_LEN)
    p.add_argument("--maximal", action="store_true", help="keep only maximal strings")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hanmine",
        description="Frequency analytics for unsegmented Chinese corpora",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(fn=fn)
        if name != "serve":
            p.add_argument("manifest", help="JSON-lines corpus manifest")
            p.add_argument("--out", choices=("csv", "json"), default="csv")
        return p

    add("ingest", cmd_ingest, "validate a manifest and list its documents")

    p = add("stats", cmd_stats, "collection summary row")
    _add_extraction_args(p)

    p = add("pseudowords", cmd_pseudowords, "frequent-string table")
    _add_extraction_args(p)

    p = add("zipf", cmd_zipf, "rank-frequency curve and power-law fit")
    _add_extraction_args(p)
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--fit", default="", metavar="LO:HI", help="rank range for the fit")

    p = add("trends", cmd_trends, "annual keyword counts and special years")
    p.add_argument("--keywords", required=True, help="comma-separated keyword list")
    p.add_argument("--lam", type=float, default=DEFAULT_LAMBDA)
    p.add_argument("--ratios", action="store_true", help="emit shares instead of counts")

    p = add("collocate", cmd_collocate, "keyword co-occurrence per year")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--window", type=int, default=DEFAULT_WINDOW)
    p.add_argument("--sweep", default="", metavar="W1,W2,...", help="sweep over windows")

    p = add("rank", cmd_rank, "rank documents by keyword weight")
    p.add_argument("--keywords", required=True)
    p.add_argument("--scheme", default="tf_sum")
    p.add_argument("--year", type=int, default=None)

    p = add("narrative", cmd_narrative, "per-chapter frequency series")
    p.add_argument("--pattern", required=True)
    p.add_argument("--event", default="", help="longer phrase embedding the pattern")

    p = add("concord", cmd_concord, "keyword-in-context rows")
    p.add_argument("--pattern", required=True)
    p.add_argument("--context", type=int, default=10)

    p = sub.add_parser("serve", help="run the HTTP API for a project")
    p.set_defaults(fn=cmd_serve)
    p.add_argument("project", help="project JSON file")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8450)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
