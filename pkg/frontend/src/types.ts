/** Shapes of /api/v1 responses. The client treats every number as opaque:
 * it renders what the server sent and never derives statistics itself. */

export interface CorpusInfo {
  name: string;
  doc_count: number;
  total_chars: number;
  distinct_chars: number;
  pseudowords: number;
  axis: "year" | "segment";
}

export interface PseudowordRow {
  string: string;
  length: number;
  total_freq: number;
  doc_freq: number;
}

export interface PseudowordPage {
  rows: PseudowordRow[];
  total: number;
}

export interface KeywordSetInfo {
  name: string;
  keywords: string[];
  notes: Record<string, string>;
}

export interface SpecialEntry {
  keyword: string;
  year: number;
  keyword_share: number;
  baseline_share: number;
}

export interface TrendResponse {
  years: number[];
  counts: Record<string, number[]>;
  totals: Record<string, number>;
  baseline: number[];
  grand_total: number;
  missing: string[];
  shares: Record<string, number[] | null>;
  baseline_shares: number[] | null;
  lambda: number;
  special: SpecialEntry[];
}

export interface SpecialYearResponse {
  lambda: number;
  special: SpecialEntry[];
}

export interface CollocationResponse {
  a: string;
  b: string;
  window: number;
  years: number[];
  counts: number[];
  ratios: (number | null)[];
  total: number;
}

export interface SweepSeries {
  window: number;
  years: number[];
  counts: number[];
  total: number;
}

export interface SweepResponse {
  a: string;
  b: string;
  windows: number[];
  series: SweepSeries[];
}

export interface RankedRow {
  rank: number;
  doc_id: string;
  weight: number;
  year: number | null;
  segment_index: number | null;
  author: string;
  title: string;
  breakdown: Record<string, number>;
}

export interface ConcordanceRow {
  doc_id: string;
  position: number;
  left: string;
  match: string;
  right: string;
}

export interface Series {
  kind: string;
  segments: number[];
  values: (number | null)[];
}

export interface NarrativeResponse {
  pattern: string;
  raw_freq: Series;
  length: Series;
  normalized: Series;
  event?: string;
  event_freq?: Series;
  ratio?: Series;
}

export interface ZipfPoint {
  rank: number;
  freq: number;
  value: number;
  log_rank: number;
  log_value: number;
}

export interface ZipfResponse {
  normalized: boolean;
  points: ZipfPoint[];
  fit: {
    slope: number;
    intercept: number;
    r_squared: number;
    rank_lo: number;
    rank_hi: number;
  } | null;
}
