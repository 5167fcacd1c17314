/** Concept browser: search box + ranked results + clickable concept graph +
 *  document pane with server-provided highlights.  All data comes from the
 *  documented GET endpoints; clicking a graph node re-issues it as the query
 *  and pushes a history entry so the back button restores earlier graphs.
 *
 *  Query terms are sent verbatim as /api/graph term parameters; the server
 *  tokenizes them, so a typed multi-word query is one parameter and a
 *  clicked node label (which may itself be multi-word) is one parameter. */

import { ApiClient, ApiError } from "./api.js";
import type { DocumentDto, GraphDto, Measure, SearchResult } from "./api.js";
import { resolveConfig, type AppConfig } from "./config.js";
import { renderGraph } from "./graphview.js";

export interface UiState {
  queryTerms: string[];
  measure: Measure;
  results: SearchResult[];
  graph: GraphDto | null;
  selectedDoc: DocumentDto | null;
  error: string | null;
}

interface HistoryEntry {
  queryTerms: string[];
  measure: Measure;
}

export interface App {
  submitSearch(query: string): Promise<void>;
  clickNode(term: string): Promise<void>;
  openDocument(docId: string): Promise<void>;
  setMeasure(measure: Measure): Promise<void>;
  getState(): Readonly<UiState>;
  whenIdle(): Promise<void>;
  destroy(): void;
}

export function mountApp(root: HTMLElement, overrides?: Partial<AppConfig>): App {
  const config = resolveConfig(overrides);
  const api = new ApiClient(config.apiBase);

  const state: UiState = {
    queryTerms: [],
    measure: "pmi",
    results: [],
    graph: null,
    selectedDoc: null,
    error: null,
  };

  root.innerHTML = `
    <div class="banner hidden" role="alert"></div>
    <form class="search-form">
      <input class="query-input" type="search" list="suggest-list"
             placeholder="search terms, e.g. database computer science" autocomplete="off">
      <datalist id="suggest-list"></datalist>
      <button type="submit">Search</button>
      <span class="measure-toggle">
        <label><input type="radio" name="measure" value="pmi" checked> pmi</label>
        <label><input type="radio" name="measure" value="lr"> lr</label>
      </span>
    </form>
    <main class="panels">
      <section class="results-panel"><h2>Documents</h2><ol class="results"></ol></section>
      <section class="graph-panel"><h2>Concepts</h2><div class="graph-container"></div></section>
      <section class="document-panel"><h2>Document</h2><div class="document-view"></div></section>
    </main>
  `;

  const banner = root.querySelector(".banner") as HTMLElement;
  const form = root.querySelector(".search-form") as HTMLFormElement;
  const input = root.querySelector(".query-input") as HTMLInputElement;
  const suggestList = root.querySelector("#suggest-list") as HTMLElement;
  const resultsList = root.querySelector(".results") as HTMLElement;
  const graphContainer = root.querySelector(".graph-container") as HTMLElement;
  const documentView = root.querySelector(".document-view") as HTMLElement;

  // latest-wins: responses are dropped unless they carry the newest epoch
  const epochs = { query: 0, doc: 0, suggest: 0 };
  const inFlight = new Set<Promise<unknown>>();

  function track<T>(promise: Promise<T>): Promise<T> {
    inFlight.add(promise);
    promise.finally(() => inFlight.delete(promise)).catch(() => undefined);
    return promise;
  }

  function showError(message: string): void {
    state.error = message;
    banner.textContent = message;
    banner.classList.remove("hidden");
  }

  function clearError(): void {
    state.error = null;
    banner.textContent = "";
    banner.classList.add("hidden");
  }

  function renderResults(): void {
    resultsList.textContent = "";
    for (const result of state.results) {
      const item = document.createElement("li");
      item.className = "result";
      item.dataset.docId = result.doc_id;
      const title = document.createElement("a");
      title.className = "result-title";
      title.href = "#";
      title.textContent = result.title;
      title.addEventListener("click", (event) => {
        event.preventDefault();
        void openDocument(result.doc_id);
      });
      const score = document.createElement("span");
      score.className = "result-score";
      score.textContent = result.score.toFixed(4);
      const snippet = document.createElement("p");
      snippet.className = "result-snippet";
      snippet.textContent = result.snippet;
      item.append(title, score, snippet);
      resultsList.appendChild(item);
    }
  }

  function renderGraphPanel(): void {
    if (!state.graph) {
      graphContainer.textContent = "";
      return;
    }
    renderGraph(graphContainer, state.graph, {
      seed: config.layoutSeed,
      onNodeClick: (term) => void clickNode(term),
    });
  }

  function renderDocument(): void {
    documentView.textContent = "";
    const doc = state.selectedDoc;
    if (!doc) return;

    const heading = document.createElement("h3");
    heading.textContent = doc.title;
    documentView.appendChild(heading);

    const body = document.createElement("div");
    body.className = "doc-text";
    let cursor = 0;
    for (const [start, end] of doc.highlights) {
      if (start > cursor) {
        body.appendChild(document.createTextNode(doc.text.slice(cursor, start)));
      }
      const mark = document.createElement("mark");
      mark.dataset.start = String(start);
      mark.dataset.end = String(end);
      mark.textContent = doc.text.slice(start, end);
      body.appendChild(mark);
      cursor = end;
    }
    if (cursor < doc.text.length) {
      body.appendChild(document.createTextNode(doc.text.slice(cursor)));
    }
    documentView.appendChild(body);

    const phrases = document.createElement("ul");
    phrases.className = "keyphrases";
    for (const phrase of doc.keyphrases) {
      const item = document.createElement("li");
      item.textContent = `${phrase.terms.join(" ")} (${phrase.score.toFixed(4)})`;
      phrases.appendChild(item);
    }
    documentView.appendChild(phrases);
  }

  function pushHistory(): void {
    const entry: HistoryEntry = { queryTerms: [...state.queryTerms], measure: state.measure };
    const params = new URLSearchParams();
    if (state.queryTerms.length) params.set("q", state.queryTerms.join(" "));
    params.set("measure", state.measure);
    history.pushState(entry, "", `?${params.toString()}`);
  }

  interface FetchOptions {
    refetchSearch: boolean;
    pushEntry: boolean;
  }

  async function fetchQuery(queryTerms: string[], measure: Measure, opts: FetchOptions): Promise<void> {
    const epoch = ++epochs.query;
    const queryText = queryTerms.join(" ");
    try {
      const graphPromise = track(api.graph(queryTerms, measure));
      const searchPromise = opts.refetchSearch ? track(api.search(queryText)) : null;
      const graph = await graphPromise;
      const search = searchPromise ? await searchPromise : null;
      if (epoch !== epochs.query) return; // superseded by a newer action
      const changed = queryText !== state.queryTerms.join(" ");
      state.queryTerms = queryTerms;
      state.measure = measure;
      state.graph = graph;
      if (search) state.results = search.results;
      clearError();
      renderResults();
      renderGraphPanel();
      if (opts.pushEntry && changed) pushHistory();
    } catch (error) {
      if (epoch !== epochs.query) return;
      showError(error instanceof ApiError ? error.message : `request failed: ${String(error)}`);
    }
  }

  async function submitSearch(query: string): Promise<void> {
    const text = query.trim().replace(/\s+/g, " ");
    if (!text) return; // blank input: no request
    input.value = text;
    await fetchQuery([text], state.measure, { refetchSearch: true, pushEntry: true });
  }

  async function clickNode(term: string): Promise<void> {
    await submitSearch(term);
  }

  async function openDocument(docId: string): Promise<void> {
    const epoch = ++epochs.doc;
    try {
      const doc = await track(api.document(docId));
      if (epoch !== epochs.doc) return;
      state.selectedDoc = doc;
      clearError();
      renderDocument();
    } catch (error) {
      if (epoch !== epochs.doc) return;
      showError(error instanceof ApiError ? error.message : `request failed: ${String(error)}`);
    }
  }

  async function setMeasure(measure: Measure): Promise<void> {
    syncMeasureRadios(measure);
    if (measure === state.measure) return;
    if (state.queryTerms.length === 0) {
      state.measure = measure;
      return;
    }
    // same query terms, graph refetch only
    await fetchQuery([...state.queryTerms], measure, { refetchSearch: false, pushEntry: false });
  }

  const onSubmit = (event: Event) => {
    event.preventDefault();
    void submitSearch(input.value);
  };
  form.addEventListener("submit", onSubmit);

  for (const radio of root.querySelectorAll<HTMLInputElement>('input[name="measure"]')) {
    radio.addEventListener("change", () => void setMeasure(radio.value as Measure));
  }

  let suggestTimer: ReturnType<typeof setTimeout> | undefined;
  const onInput = () => {
    if (suggestTimer !== undefined) clearTimeout(suggestTimer);
    const prefix = input.value.trim().split(/\s+/).pop() ?? "";
    if (!prefix) return;
    suggestTimer = setTimeout(() => {
      const epoch = ++epochs.suggest;
      void track(api.suggest(prefix))
        .then((body) => {
          if (epoch !== epochs.suggest) return;
          suggestList.textContent = "";
          for (const term of body.terms) {
            const option = document.createElement("option");
            option.value = term;
            suggestList.appendChild(option);
          }
        })
        .catch(() => undefined);
    }, 150);
  };
  input.addEventListener("input", onInput);

  function syncMeasureRadios(measure: Measure): void {
    for (const radio of root.querySelectorAll<HTMLInputElement>('input[name="measure"]')) {
      radio.checked = radio.value === measure;
    }
  }

  const onPopState = (event: PopStateEvent) => {
    const entry = (event.state ?? null) as HistoryEntry | null;
    if (entry && entry.queryTerms.length) {
      input.value = entry.queryTerms.join(" ");
      syncMeasureRadios(entry.measure);
      void fetchQuery(entry.queryTerms, entry.measure, { refetchSearch: true, pushEntry: false });
    } else {
      state.queryTerms = [];
      state.results = [];
      state.graph = null;
      input.value = "";
      renderResults();
      renderGraphPanel();
    }
  };
  window.addEventListener("popstate", onPopState);
  history.replaceState({ queryTerms: [], measure: state.measure } satisfies HistoryEntry, "");

  async function whenIdle(): Promise<void> {
    while (inFlight.size > 0) {
      await Promise.allSettled([...inFlight]);
    }
  }

  function destroy(): void {
    window.removeEventListener("popstate", onPopState);
    form.removeEventListener("submit", onSubmit);
    if (suggestTimer !== undefined) clearTimeout(suggestTimer);
    root.innerHTML = "";
  }

  return { submitSearch, clickNode, openDocument, setMeasure, getState: () => state, whenIdle, destroy };
}
