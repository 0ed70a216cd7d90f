/** Interactive refinement client: query box, rerank selector, automatic
 *  expansion checkbox, result list and the tabbed right column whose
 *  elements feed clicks back into the next query.
 *
 *  Rankings shown are always byte-identical to the API response order;
 *  the client never reorders.  State round-trips through the URL query
 *  string.  At most one search is in flight: responses arriving for a
 *  superseded request are discarded by sequence number.
 */

import { ApiClient } from "./api.js";
import type { RerankMode, SearchResponse } from "./api.js";
import { renderTermCloud } from "./cloud.js";
import { renderResults } from "./results.js";
import { renderAuthorTable, renderJournalTable } from "./tabs.js";
import { DEFAULT_STATE, fromQueryString, toQueryString } from "./state.js";
import type { SessionState } from "./state.js";

export interface AppElements {
  queryInput: HTMLInputElement;
  searchButton: HTMLElement;
  rerankSelect: HTMLSelectElement;
  autoExpand: HTMLInputElement;
  status: HTMLElement;
  results: HTMLElement;
  cloud: HTMLElement;
  journals: HTMLElement;
  authors: HTMLElement;
  tabButtons: NodeListOf<HTMLElement>;
  tabPanels: NodeListOf<HTMLElement>;
}

export class App {
  state: SessionState = { ...DEFAULT_STATE };
  searchCount = 0; // searches issued; tests assert on this
  private seq = 0;
  lastResponse: SearchResponse | null = null;

  constructor(
    private api: ApiClient,
    private el: AppElements,
    private win: Window,
  ) {}

  start(): void {
    this.state = fromQueryString(this.win.location.search);
    this.bind();
    this.syncControls();
    if (this.state.q) {
      void this.runSearch(false);
    }
  }

  private bind(): void {
    this.el.searchButton.addEventListener("click", () => {
      this.state.q = this.el.queryInput.value;
      void this.runSearch();
    });
    this.el.queryInput.addEventListener("keydown", (ev) => {
      if ((ev as KeyboardEvent).key === "Enter") {
        this.state.q = this.el.queryInput.value;
        void this.runSearch();
      }
    });
    this.el.rerankSelect.addEventListener("change", () => {
      this.setRerank(this.el.rerankSelect.value as RerankMode);
    });
    this.el.autoExpand.addEventListener("change", () => {
      this.state.expand = this.el.autoExpand.checked ? "auto" : "off";
      this.state.terms = [];
      void this.runSearch();
    });
    this.win.addEventListener("popstate", () => {
      this.state = fromQueryString(this.win.location.search);
      this.syncControls();
      void this.runSearch(false);
    });
    this.el.tabButtons.forEach((btn) => {
      btn.addEventListener("click", () => this.showTab(btn.dataset.tab ?? ""));
    });
  }

  private syncControls(): void {
    this.el.queryInput.value = this.state.q;
    this.el.rerankSelect.value = this.state.rerank;
    this.el.autoExpand.checked = this.state.expand === "auto";
  }

  setRerank(mode: RerankMode): void {
    this.state.rerank = mode;
    void this.runSearch();
    this.win.scrollTo(0, 0);
  }

  /** Term-cloud click: append the descriptor to the query, refire once. */
  addTermToQuery(descriptor: string): void {
    this.state.q = this.state.q ? `${this.state.q} ${descriptor}` : descriptor;
    this.syncControls();
    void this.runSearch();
  }

  /** Author-table click: add the author's name as filter tokens, refire. */
  filterByAuthor(author: string): void {
    this.state.q = this.state.q ? `${this.state.q} ${author}` : author;
    this.syncControls();
    void this.runSearch();
  }

  private pushUrl(): void {
    const qs = toQueryString(this.state);
    this.win.history.pushState(null, "", qs || this.win.location.pathname);
  }

  async runSearch(push = true): Promise<void> {
    const mySeq = ++this.seq;
    this.searchCount += 1;
    if (push) {
      this.pushUrl();
    }
    this.el.status.textContent = "Searching…";
    try {
      const [response, suggestions, journals, authors] = await Promise.all([
        this.api.search({ ...this.state, k: 50 }),
        this.api.suggest(this.state.q),
        this.api.journals(this.state.q),
        this.api.authors(this.state.q),
      ]);
      if (mySeq !== this.seq) {
        return; // superseded by a newer search
      }
      this.lastResponse = response;
      this.el.status.textContent =
        `Total hits: ${response.total}` +
        (response.expansion.length > 0
          ? ` — expanded with: ${response.expansion.join(", ")}`
          : "");
      renderResults(this.el.results, response.hits, this.api);
      renderTermCloud(this.el.cloud, suggestions, (d) => this.addTermToQuery(d));
      renderJournalTable(this.el.journals, journals);
      renderAuthorTable(this.el.authors, authors, (a) => this.filterByAuthor(a));
    } catch (err) {
      if (mySeq === this.seq) {
        this.el.status.textContent = `Search failed: ${String(err)}`;
      }
    }
  }

  private showTab(name: string): void {
    this.el.tabPanels.forEach((panel) => {
      panel.hidden = panel.dataset.tab !== name;
    });
    this.el.tabButtons.forEach((btn) => {
      btn.classList.toggle("active", btn.dataset.tab === name);
    });
  }
}

export function initApp(win: Window, baseUrl = ""): App {
  const doc = win.document;
  const get = (id: string) => {
    const node = doc.getElementById(id);
    if (!node) throw new Error(`missing #${id}`);
    return node;
  };
  const el: AppElements = {
    queryInput: get("query") as HTMLInputElement,
    searchButton: get("search-button"),
    rerankSelect: get("rerank") as HTMLSelectElement,
    autoExpand: get("auto-expand") as HTMLInputElement,
    status: get("status"),
    results: get("results"),
    cloud: get("term-cloud"),
    journals: get("journal-table"),
    authors: get("author-table"),
    tabButtons: doc.querySelectorAll<HTMLElement>("[data-tab].tab-button"),
    tabPanels: doc.querySelectorAll<HTMLElement>("[data-tab].tab-panel"),
  };
  const app = new App(new ApiClient(baseUrl), el, win);
  app.start();
  return app;
}
