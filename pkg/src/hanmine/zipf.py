"""Rank-frequency curves and log-log power-law fits.

Ranking is frequency-descending with consecutive distinct ranks on ties,
so a curve is always a function of rank.  Logarithms are base 10; the
fitted slope does not depend on that choice.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from hanmine.freqstrings import PseudowordTable


@dataclass(frozen=True)
class ZipfPoint:
    rank: int
    freq: int
    value: float  # freq, or freq/N when normalized
    log_rank: float
    log_value: float


@dataclass(frozen=True)
class ZipfCurve:
    points: tuple[ZipfPoint, ...]
    normalized: bool
    corpus_size: int

    def to_csv(self) -> str:
        lines = ["rank,freq,value,log_rank,log_value"]
        for p in self.points:
            lines.append(
                f"{p.rank},{p.freq},{p.value!r},{p.log_rank!r},{p.log_value!r}"
            )
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PowerLawFit:
    slope: float
    intercept: float
    r_squared: float
    rank_lo: int
    rank_hi: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "slope": self.slope,
                "intercept": self.intercept,
                "r_squared": self.r_squared,
                "rank_lo": self.rank_lo,
                "rank_hi": self.rank_hi,
            }
        )


def rank_frequency(
    table: PseudowordTable, normalize: bool = False, corpus_size: int = 0
) -> ZipfCurve:
    """Rank table entries by frequency; values are f or f/N when normalized."""
    if not table.entries:
        raise ValueError("pseudoword table is empty")
    if normalize and corpus_size < 1:
        raise ValueError("corpus_size must be >= 1 to normalize")
    freqs = [e.total_freq for e in table.entries]  # table is already sorted
    return curve_from_frequencies(freqs, normalize=normalize, corpus_size=corpus_size)


def curve_from_frequencies(
    freqs: list[int], normalize: bool = False, corpus_size: int = 0
) -> ZipfCurve:
    if not freqs:
        raise ValueError("no frequencies")
    if normalize and corpus_size < 1:
        raise ValueError("corpus_size must be >= 1 to normalize")
    if any(freqs[i] < freqs[i + 1] for i in range(len(freqs) - 1)):
        freqs = sorted(freqs, reverse=True)
    points = []
    for rank, f in enumerate(freqs, 1):
        value = f / corpus_size if normalize else float(f)
        points.append(
            ZipfPoint(
                rank=rank,
                freq=f,
                value=value,
                log_rank=math.log10(rank),
                log_value=math.log10(value),
            )
        )
    return ZipfCurve(
        points=tuple(points), normalized=normalize, corpus_size=corpus_size
    )


def fit_powerlaw(
    curve: ZipfCurve, rank_range: Optional[tuple[int, int]] = None
) -> PowerLawFit:
    """Ordinary least squares on (log rank, log value) over ``rank_range``."""
    pts = curve.points
    if rank_range is not None:
        lo, hi = rank_range
        pts = tuple(p for p in pts if lo <= p.rank <= hi)
    if len(pts) < 2:
        raise ValueError("need at least 2 points to fit")
    x = np.array([p.log_rank for p in pts])
    y = np.array([p.log_value for p in pts])
    slope, intercept = np.polyfit(x, y, 1)
    residuals = y - (slope * x + intercept)
    ss_res = float(np.sum(residuals**2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r_squared = 1.0 if ss_tot == 0.0 else 1.0 - ss_res / ss_tot
    return PowerLawFit(
        slope=float(slope),
        intercept=float(intercept),
        r_squared=r_squared,
        rank_lo=pts[0].rank,
        rank_hi=pts[-1].rank,
    )


def curve_distance(a: ZipfCurve, b: ZipfCurve) -> float:
    """Max |log10 value| gap over the ranks the two curves share."""
    if a.normalized != b.normalized:
        raise ValueError("curves must share the same normalization")
    shared = min(len(a.points), len(b.points))
    if shared == 0:
        raise ValueError("curves share no ranks")
    return max(
        abs(a.points[i].log_value - b.points[i].log_value) for i in range(shared)
    )


def sample_zipf(
    n_tokens: int, n_types: int, exponent: float = 1.0, seed: int = 0
) -> np.ndarray:
    """Token counts per type drawn from a Zipf(exponent) distribution by
    inverse-CDF sampling; used as a seeded reference sampler."""
    ranks = np.arange(1, n_types + 1, dtype=float)
    pmf = ranks**-exponent
    cdf = np.cumsum(pmf / pmf.sum())
    rng = np.random.default_rng(seed)
    draws = np.searchsorted(cdf, rng.random(n_tokens), side="right")
    return np.bincount(draws, minlength=n_types)
