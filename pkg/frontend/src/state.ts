/** ViewState: everything the UI shows, reconstructable from the URL query
 * string so any view is shareable as a link. */

export type ViewName =
  | "pseudowords"
  | "trends"
  | "collocations"
  | "narrative"
  | "zipf";

export interface ViewState {
  view: ViewName;
  corpus: string;
  set: string;
  lambda: number; // λ slider; must stay > 0
  window: number; // collocation window; must stay >= 0
  windows: number[]; // sweep options, ascending
  page: number;
  pageSize: number;
  minFreq: number;
  query: string; // pseudoword substring filter
  pairA: string;
  pairB: string;
  pattern: string; // narrative base pattern
  event: string; // narrative event phrase
  chart: "raw" | "normalized" | "ratio"; // narrative chart toggle
}

export const DEFAULT_STATE: ViewState = {
  view: "pseudowords",
  corpus: "",
  set: "",
  lambda: 1.1,
  window: 30,
  windows: [10, 20, 30],
  page: 1,
  pageSize: 50,
  minFreq: 11,
  query: "",
  pairA: "",
  pairB: "",
  pattern: "",
  event: "",
  chart: "raw",
};

const VIEWS: ViewName[] = ["pseudowords", "trends", "collocations", "narrative", "zipf"];
const CHARTS = ["raw", "normalized", "ratio"] as const;

function num(raw: string | null, fallback: number, ok: (n: number) => boolean): number {
  if (raw === null) return fallback;
  const n = Number(raw);
  return Number.isFinite(n) && ok(n) ? n : fallback;
}

/** Parse a query string (with or without leading "?"). Invalid or missing
 * parameters fall back to defaults, so a mangled link still renders. */
export function parseViewState(search: string): ViewState {
  const q = new URLSearchParams(search.startsWith("?") ? search.slice(1) : search);
  const view = q.get("view");
  const chart = q.get("chart");
  let windows = DEFAULT_STATE.windows;
  const rawWindows = q.get("windows");
  if (rawWindows !== null) {
    const parsed = rawWindows
      .split(",")
      .filter((w) => w !== "")
      .map(Number);
    const ascending = parsed.every(
      (w, i) => Number.isInteger(w) && w >= 0 && (i === 0 || parsed[i - 1] < w),
    );
    if (parsed.length > 0 && ascending) windows = parsed;
  }
  return {
    view: VIEWS.includes(view as ViewName) ? (view as ViewName) : DEFAULT_STATE.view,
    corpus: q.get("corpus") ?? DEFAULT_STATE.corpus,
    set: q.get("set") ?? DEFAULT_STATE.set,
    lambda: num(q.get("lambda"), DEFAULT_STATE.lambda, (n) => n > 0),
    window: num(q.get("window"), DEFAULT_STATE.window, (n) => Number.isInteger(n) && n >= 0),
    windows,
    page: num(q.get("page"), DEFAULT_STATE.page, (n) => Number.isInteger(n) && n >= 1),
    pageSize: num(q.get("pageSize"), DEFAULT_STATE.pageSize, (n) => Number.isInteger(n) && n >= 1),
    minFreq: num(q.get("minFreq"), DEFAULT_STATE.minFreq, (n) => Number.isInteger(n) && n >= 0),
    query: q.get("q") ?? DEFAULT_STATE.query,
    pairA: q.get("a") ?? DEFAULT_STATE.pairA,
    pairB: q.get("b") ?? DEFAULT_STATE.pairB,
    pattern: q.get("pattern") ?? DEFAULT_STATE.pattern,
    event: q.get("event") ?? DEFAULT_STATE.event,
    chart: (CHARTS as readonly string[]).includes(chart ?? "")
      ? (chart as ViewState["chart"])
      : DEFAULT_STATE.chart,
  };
}

/** Serialize to a query string, omitting parameters at their default value
 * so shared links stay short. Key order is fixed for stable URLs. */
export function serializeViewState(state: ViewState): string {
  const q = new URLSearchParams();
  const put = (key: string, value: string, dflt: string) => {
    if (value !== dflt) q.set(key, value);
  };
  put("view", state.view, DEFAULT_STATE.view);
  put("corpus", state.corpus, DEFAULT_STATE.corpus);
  put("set", state.set, DEFAULT_STATE.set);
  put("lambda", String(state.lambda), String(DEFAULT_STATE.lambda));
  put("window", String(state.window), String(DEFAULT_STATE.window));
  put("windows", state.windows.join(","), DEFAULT_STATE.windows.join(","));
  put("page", String(state.page), String(DEFAULT_STATE.page));
  put("pageSize", String(state.pageSize), String(DEFAULT_STATE.pageSize));
  put("minFreq", String(state.minFreq), String(DEFAULT_STATE.minFreq));
  put("q", state.query, DEFAULT_STATE.query);
  put("a", state.pairA, DEFAULT_STATE.pairA);
  put("b", state.pairB, DEFAULT_STATE.pairB);
  put("pattern", state.pattern, DEFAULT_STATE.pattern);
  put("event", state.event, DEFAULT_STATE.event);
  put("chart", state.chart, DEFAULT_STATE.chart);
  return q.toString();
}
