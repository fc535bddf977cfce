"""Analytics for unsegmented Chinese corpora.

Extracts frequent substrings without word segmentation, checks their
rank-frequency behaviour, and supports keyword trend, collocation,
document-ranking, and per-chapter analyses on top of them.
"""

from hanmine.corpus import (
    Corpus,
    Document,
    NormalizationPolicy,
    concordance,
    corpus_stats,
    count_occurrences,
    ingest_corpus,
)
from hanmine.freqstrings import (
    Pseudoword,
    PseudowordTable,
    SuffixIndex,
    annotate_doc_frequencies,
    build_index,
    extract_pseudowords,
)
from hanmine.zipf import ZipfCurve, PowerLawFit, curve_distance, fit_powerlaw, rank_frequency
from hanmine.trends import (
    KeywordSet,
    SpecialYearReport,
    TrendTable,
    annual_percentage,
    build_trend_table,
    special_years,
)
from hanmine.collocations import (
    CollocationSeries,
    CollocationSpec,
    collocation_trend,
    count_collocations,
    window_sweep,
)
from hanmine.ranking import RankedDoc, rank_documents
from hanmine.narrative import (
    SegmentSeries,
    conditional_ratio,
    normalized_frequencies,
    segment_frequencies,
    segment_lengths,
)
from hanmine.project import Project, load_project, save_project

__version__ = "0.1.0"
