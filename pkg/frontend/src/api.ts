/** Thin typed client for /api/v1. Each method is one endpoint; server error
 * bodies are surfaced verbatim. Latest-wins: issuing a request under a key
 * aborts the previous in-flight request under the same key. */

import type {
  CollocationResponse,
  ConcordanceRow,
  CorpusInfo,
  KeywordSetInfo,
  NarrativeResponse,
  PseudowordPage,
  RankedRow,
  SpecialYearResponse,
  SweepResponse,
  TrendResponse,
  ZipfResponse,
} from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

export interface PseudowordQuery {
  page?: number;
  pageSize?: number;
  minFreq?: number;
  minLen?: number;
  maxLen?: number;
  q?: string;
}

function qs(params: Record<string, string | number | undefined>): string {
  const q = new URLSearchParams();
  for (const [key, value] of Object.entries(params)) {
    if (value !== undefined && value !== "") q.set(key, String(value));
  }
  const s = q.toString();
  return s ? `?${s}` : "";
}

export class ApiClient {
  private inflight = new Map<string, AbortController>();

  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  /** GET a JSON endpoint; an ongoing request with the same abort key loses. */
  private async get<T>(path: string, abortKey?: string): Promise<T> {
    const { body } = await this.getWithResponse<T>(path, abortKey);
    return body;
  }

  private async getWithResponse<T>(
    path: string,
    abortKey?: string,
  ): Promise<{ body: T; response: Response }> {
    let signal: AbortSignal | undefined;
    if (abortKey) {
      this.inflight.get(abortKey)?.abort();
      const controller = new AbortController();
      this.inflight.set(abortKey, controller);
      signal = controller.signal;
    }
    const response = await this.fetchFn(this.base + path, { signal });
    if (!response.ok) {
      let message = `HTTP ${response.status}`;
      try {
        const data = (await response.json()) as { error?: string };
        if (data.error) message = data.error;
      } catch {
        /* non-JSON error body: keep the status line */
      }
      throw new ApiError(response.status, message);
    }
    return { body: (await response.json()) as T, response };
  }

  corpora(): Promise<CorpusInfo[]> {
    return this.get("/api/v1/corpora");
  }

  async pseudowords(corpus: string, query: PseudowordQuery = {}): Promise<PseudowordPage> {
    const path =
      `/api/v1/corpora/${encodeURIComponent(corpus)}/pseudowords` +
      qs({
        page: query.page,
        page_size: query.pageSize,
        min_freq: query.minFreq,
        min_len: query.minLen,
        max_len: query.maxLen,
        q: query.q,
      });
    const { body, response } = await this.getWithResponse<
      import("./types.js").PseudowordRow[]
    >(path, "pseudowords");
    return { rows: body, total: Number(response.headers.get("X-Total-Count") ?? body.length) };
  }

  keywordSets(): Promise<KeywordSetInfo[]> {
    return this.get("/api/v1/keyword-sets");
  }

  keywordSet(name: string): Promise<KeywordSetInfo> {
    return this.get(`/api/v1/keyword-sets/${encodeURIComponent(name)}`);
  }

  async putKeywordSet(
    name: string,
    keywords: string[],
    notes: Record<string, string> = {},
  ): Promise<KeywordSetInfo> {
    const response = await this.fetchFn(
      `${this.base}/api/v1/keyword-sets/${encodeURIComponent(name)}`,
      {
        method: "PUT",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ keywords, notes }),
      },
    );
    if (!response.ok) {
      const data = (await response.json()) as { error?: string };
      throw new ApiError(response.status, data.error ?? `HTTP ${response.status}`);
    }
    return (await response.json()) as KeywordSetInfo;
  }

  async deleteKeywordSet(name: string): Promise<void> {
    const response = await this.fetchFn(
      `${this.base}/api/v1/keyword-sets/${encodeURIComponent(name)}`,
      { method: "DELETE" },
    );
    if (!response.ok) {
      const data = (await response.json()) as { error?: string };
      throw new ApiError(response.status, data.error ?? `HTTP ${response.status}`);
    }
  }

  trends(corpus: string, set: string, lambda?: number): Promise<TrendResponse> {
    return this.get(
      `/api/v1/corpora/${encodeURIComponent(corpus)}/trends` + qs({ set, lam: lambda }),
      "trends",
    );
  }

  specialYears(corpus: string, set: string, lambda: number): Promise<SpecialYearResponse> {
    return this.get(
      `/api/v1/corpora/${encodeURIComponent(corpus)}/special-years` + qs({ set, lam: lambda }),
      "special-years",
    );
  }

  collocations(corpus: string, a: string, b: string, window: number): Promise<CollocationResponse> {
    return this.get(
      `/api/v1/corpora/${encodeURIComponent(corpus)}/collocations` + qs({ a, b, window }),
      "collocations",
    );
  }

  collocationSweep(corpus: string, a: string, b: string, windows: number[]): Promise<SweepResponse> {
    return this.get(
      `/api/v1/corpora/${encodeURIComponent(corpus)}/collocations/sweep` +
        qs({ a, b, windows: windows.join(",") }),
      "collocations",
    );
  }

  ranking(corpus: string, set: string, scheme?: string, year?: number): Promise<RankedRow[]> {
    return this.get(
      `/api/v1/corpora/${encodeURIComponent(corpus)}/ranking` + qs({ set, scheme, year }),
      "ranking",
    );
  }

  concordance(corpus: string, pattern: string, context = 10, limit = 50): Promise<ConcordanceRow[]> {
    return this.get(
      `/api/v1/corpora/${encodeURIComponent(corpus)}/concordance` +
        qs({ pattern, context, limit }),
      "concordance",
    );
  }

  narrative(corpus: string, pattern: string, event?: string): Promise<NarrativeResponse> {
    return this.get(
      `/api/v1/corpora/${encodeURIComponent(corpus)}/narrative` + qs({ pattern, event }),
      "narrative",
    );
  }

  zipf(corpus: string, normalize = false, rankLo = 0, rankHi = 0): Promise<ZipfResponse> {
    return this.get(
      `/api/v1/corpora/${encodeURIComponent(corpus)}/zipf` +
        qs({
          normalize: normalize ? "true" : undefined,
          rank_lo: rankLo || undefined,
          rank_hi: rankHi || undefined,
        }),
      "zipf",
    );
  }
}
