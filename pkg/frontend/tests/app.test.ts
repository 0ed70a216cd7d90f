/** Browser-level tests for the refinement loop, run in jsdom against a
 *  live fixture server (see global-setup.ts). */

import { beforeEach, describe, expect, inject, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import type { SearchResponse } from "../src/api.js";
import { App, initApp } from "../src/app.js";
import type { AppElements } from "../src/app.js";
import { fromQueryString } from "../src/state.js";

const baseUrl = inject("baseUrl");
const api = new ApiClient(baseUrl);

const PAGE = `
  <input id="query" type="search">
  <button id="search-button">Search</button>
  <select id="rerank">
    <option value="none">none</option>
    <option value="bradford">bradford</option>
    <option value="centrality">centrality</option>
  </select>
  <input id="auto-expand" type="checkbox">
  <p id="status"></p>
  <div id="results"></div>
  <button class="tab-button" data-tab="cloud"></button>
  <button class="tab-button" data-tab="journals"></button>
  <button class="tab-button" data-tab="authors"></button>
  <div class="tab-panel" data-tab="cloud" id="term-cloud"></div>
  <div class="tab-panel" data-tab="journals" id="journal-table" hidden></div>
  <div class="tab-panel" data-tab="authors" id="author-table" hidden></div>
`;

async function waitFor(cond: () => boolean, ms = 15000): Promise<void> {
  const deadline = Date.now() + ms;
  while (!cond()) {
    if (Date.now() > deadline) throw new Error("waitFor timed out");
    await new Promise((r) => setTimeout(r, 25));
  }
}

function renderedIds(): string[] {
  return Array.from(
    document.querySelectorAll<HTMLElement>("#results .result"),
  ).map((li) => li.dataset.docId!);
}

function freshApp(url = "/"): App {
  window.history.pushState(null, "", url);
  document.body.innerHTML = PAGE;
  return initApp(window, baseUrl);
}

async function settled(app: App): Promise<void> {
  await waitFor(() => app.lastResponse !== null);
}

beforeEach(() => {
  window.history.pushState(null, "", "/");
  document.body.innerHTML = "";
});

describe("refinement loop against the fixture server", () => {
  it("clicking a term-cloud suggestion appends it to the query and fires exactly one search", async () => {
    const app = freshApp("/?q=war");
    await settled(app);
    const before = app.searchCount;
    const fetchSpy = vi.spyOn(globalThis, "fetch");

    const term = document.querySelector<HTMLElement>(".cloud-term");
    expect(term).not.toBeNull();
    const descriptor = term!.textContent!;
    term!.click();
    await waitFor(() => app.searchCount === before + 1 && app.lastResponse!.query.includes(descriptor));

    expect(app.searchCount).toBe(before + 1);
    expect((document.getElementById("query") as HTMLInputElement).value).toBe(
      `war ${descriptor}`,
    );
    const searchCalls = fetchSpy.mock.calls.filter((c) =>
      String(c[0]).includes("/api/search"),
    );
    expect(searchCalls).toHaveLength(1);
    fetchSpy.mockRestore();
  });

  it("switching rerank mode re-fetches and renders in API order; switching back restores", async () => {
    const app = freshApp("/?q=war media");
    await settled(app);
    const baseOrder = renderedIds();
    expect(baseOrder.length).toBeGreaterThan(1);

    const select = document.getElementById("rerank") as HTMLSelectElement;
    select.value = "bradford";
    select.dispatchEvent(new window.Event("change"));
    await waitFor(() => app.lastResponse!.rerank === "bradford");
    const bradOrder = renderedIds();

    const expected = await api.search({
      q: "war media", rerank: "bradford", expand: "off", terms: [], k: 50,
    });
    expect(bradOrder).toEqual(expected.hits.map((h) => h.id));
    expect(bradOrder).not.toEqual(baseOrder); // skewed fixture diverges

    select.value = "none";
    select.dispatchEvent(new window.Event("change"));
    await waitFor(() => app.lastResponse!.rerank === "none");
    expect(renderedIds()).toEqual(baseOrder); // stateless round trip
  });

  it("rerank mode persists across query edits", async () => {
    const app = freshApp("/?q=war&rerank=centrality");
    await settled(app);
    const input = document.getElementById("query") as HTMLInputElement;
    input.value = "school";
    input.dispatchEvent(new window.KeyboardEvent("keydown", { key: "Enter" }));
    await waitFor(() => app.lastResponse!.query === "school");
    expect(app.lastResponse!.rerank).toBe("centrality");
    expect(window.location.search).toContain("rerank=centrality");
  });

  it("URL round-trip restores full session state", async () => {
    const app = freshApp("/?q=media");
    await settled(app);
    (document.getElementById("auto-expand") as HTMLInputElement).click();
    await waitFor(() => app.lastResponse!.expansion.length > 0);
    const select = document.getElementById("rerank") as HTMLSelectElement;
    select.value = "bradford";
    select.dispatchEvent(new window.Event("change"));
    await waitFor(() => app.lastResponse!.rerank === "bradford");

    const url = window.location.search;
    const restored = freshApp(url);
    await settled(restored);
    expect(restored.state).toEqual(app.state);
    expect(restored.state).toEqual(fromQueryString(url));
    expect(restored.lastResponse!.rerank).toBe("bradford");
    expect(restored.lastResponse!.expansion.length).toBeGreaterThan(0);
  });

  it("clicking an author adds a filter token and refires the search", async () => {
    const app = freshApp("/?q=war media");
    await settled(app);
    const link = document.querySelector<HTMLElement>(".author-link");
    expect(link).not.toBeNull();
    const author = link!.textContent!;
    const before = app.searchCount;
    link!.click();
    await waitFor(() => app.searchCount === before + 1 && app.lastResponse!.query.includes(author));
    expect(app.state.q).toBe(`war media ${author}`);
  });

  it("never reorders API results client-side", async () => {
    const app = freshApp("/?q=school election&rerank=centrality");
    await settled(app);
    expect(renderedIds()).toEqual(app.lastResponse!.hits.map((h) => h.id));
    const direct = await api.search({
      q: "school election", rerank: "centrality", expand: "off", terms: [], k: 50,
    });
    expect(renderedIds()).toEqual(direct.hits.map((h) => h.id));
  });
});

describe("request sequencing", () => {
  it("discards responses of superseded searches", async () => {
    document.body.innerHTML = PAGE;
    window.history.pushState(null, "", "/");
    const slowThenFast: SearchResponse[] = [];
    const mkResponse = (query: string): SearchResponse => ({
      query, rerank: "none", expansion: [], total: 1, offset: 0, k: 50,
      hits: [{
        id: `doc-${query}`, title: query, authors: [], journal: null,
        issn: null, year: null, base_score: 1, score: 1, explain: ["base"],
      }],
      descriptor_facets: [], took_ms: 0,
    });
    let release1: () => void = () => {};
    const fakeApi = {
      search: vi.fn((params: { q: string }) => {
        if (params.q === "first") {
          return new Promise<SearchResponse>((resolve) => {
            release1 = () => resolve(mkResponse("first"));
          });
        }
        return Promise.resolve(mkResponse("second"));
      }),
      suggest: vi.fn(() => Promise.resolve([])),
      journals: vi.fn(() => Promise.resolve([])),
      authors: vi.fn(() => Promise.resolve([])),
      doc: vi.fn(),
    };
    const el: AppElements = {
      queryInput: document.getElementById("query") as HTMLInputElement,
      searchButton: document.getElementById("search-button")!,
      rerankSelect: document.getElementById("rerank") as HTMLSelectElement,
      autoExpand: document.getElementById("auto-expand") as HTMLInputElement,
      status: document.getElementById("status")!,
      results: document.getElementById("results")!,
      cloud: document.getElementById("term-cloud")!,
      journals: document.getElementById("journal-table")!,
      authors: document.getElementById("author-table")!,
      tabButtons: document.querySelectorAll("[data-tab].tab-button"),
      tabPanels: document.querySelectorAll("[data-tab].tab-panel"),
    };
    const app = new App(fakeApi as never, el, window);
    app.state.q = "first";
    const p1 = app.runSearch(false);
    app.state.q = "second";
    const p2 = app.runSearch(false);
    await p2;
    expect(app.lastResponse!.query).toBe("second");
    release1(); // stale response arrives late
    await p1;
    expect(app.lastResponse!.query).toBe("second");
    expect(renderedIds()).toEqual(["doc-second"]);
  });
});
