/** Browser entry point: wires ViewState ⇄ URL ⇄ controls ⇄ renderers.
 * All analysis numbers come from the API; this file only routes them. */

import { ApiClient, ApiError } from "./api.js";
import { CollocationController, TrendController } from "./controllers.js";
import {
  renderCollocationView,
  renderConcordance,
  renderError,
  renderNarrativeView,
  renderPseudowordTable,
  renderSweepView,
  renderZipfView,
} from "./render.js";
import {
  DEFAULT_STATE,
  parseViewState,
  serializeViewState,
  type ViewState,
} from "./state.js";

const api = new ApiClient("");
let state: ViewState = { ...DEFAULT_STATE };
let trendController: TrendController | null = null;

function $(id: string): HTMLElement {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el;
}

function pushState(): void {
  const query = serializeViewState(state);
  history.replaceState(null, "", query ? `?${query}` : location.pathname);
}

function setState(patch: Partial<ViewState>): void {
  state = { ...state, ...patch };
  pushState();
  void refresh();
}

async function refresh(): Promise<void> {
  const main = $("main");
  try {
    switch (state.view) {
      case "pseudowords": {
        const page = await api.pseudowords(state.corpus, {
          page: state.page,
          pageSize: state.pageSize,
          minFreq: state.minFreq,
          q: state.query,
        });
        main.innerHTML = renderPseudowordTable(page, state.set);
        break;
      }
      case "trends": {
        trendController = new TrendController(api, state.corpus, state.set);
        main.innerHTML = await trendController.load(state.lambda);
        break;
      }
      case "collocations": {
        const ctl = new CollocationController(api, state.corpus);
        if (state.windows.length > 1) {
          main.innerHTML = renderSweepView(
            await ctl.sweep(state.pairA, state.pairB, state.windows),
          );
        } else {
          main.innerHTML = renderCollocationView(
            await ctl.series(state.pairA, state.pairB, state.window),
          );
        }
        break;
      }
      case "narrative": {
        const data = await api.narrative(state.corpus, state.pattern, state.event || undefined);
        main.innerHTML = renderNarrativeView(data, state.chart);
        break;
      }
      case "zipf": {
        main.innerHTML = renderZipfView(await api.zipf(state.corpus));
        break;
      }
    }
  } catch (err) {
    if (err instanceof DOMException && err.name === "AbortError") return; // superseded
    main.innerHTML = renderError(err instanceof ApiError ? err.message : String(err));
  }
}

async function onLambdaInput(value: string): Promise<void> {
  const lambda = Number(value);
  if (!(lambda > 0)) return;
  state = { ...state, lambda };
  pushState();
  if (state.view === "trends" && trendController) {
    try {
      // Only the special-year report is re-requested here.
      $("main").innerHTML = await trendController.setLambda(lambda);
    } catch (err) {
      if (err instanceof DOMException && err.name === "AbortError") return;
      $("main").innerHTML = renderError(String(err));
    }
  }
}

async function onMainClick(event: Event): Promise<void> {
  const target = event.target as HTMLElement;
  const action = target.dataset.action;
  if (!action) return;
  if (action === "retry") {
    void refresh();
  } else if (action === "add-keyword" && state.set) {
    const keyword = target.dataset.keyword ?? "";
    const current = await api.keywordSet(state.set).catch(() => ({ keywords: [] as string[] }));
    if (!current.keywords.includes(keyword)) {
      await api.putKeywordSet(state.set, [...current.keywords, keyword]);
    }
    void refresh();
  } else if (action === "preview") {
    const rows = await api.concordance(state.corpus, target.dataset.keyword ?? "", 10, 20);
    $("preview").innerHTML = renderConcordance(rows);
  }
}

async function boot(): Promise<void> {
  state = parseViewState(location.search);
  const corpora = await api.corpora();
  if (!state.corpus && corpora.length > 0) state.corpus = corpora[0].name;
  const picker = $("corpus") as HTMLSelectElement;
  picker.innerHTML = corpora
    .map((c) => `<option value="${c.name}">${c.name} (${c.doc_count})</option>`)
    .join("");
  picker.value = state.corpus;
  picker.addEventListener("change", () => setState({ corpus: picker.value, page: 1 }));

  const lambda = $("lambda") as HTMLInputElement;
  lambda.value = String(state.lambda);
  lambda.addEventListener("input", () => void onLambdaInput(lambda.value));

  for (const link of document.querySelectorAll<HTMLElement>("[data-view]")) {
    link.addEventListener("click", () =>
      setState({ view: link.dataset.view as ViewState["view"] }),
    );
  }
  $("main").addEventListener("click", (e) => void onMainClick(e));
  window.addEventListener("popstate", () => {
    state = parseViewState(location.search);
    void refresh();
  });
  pushState();
  await refresh();
}

if (typeof document !== "undefined" && document.readyState !== "loading") {
  void boot();
} else if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", () => void boot());
}
