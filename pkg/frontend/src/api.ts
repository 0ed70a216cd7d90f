/** Typed client for the retrieval service HTTP API. */

export type RerankMode = "none" | "bradford" | "centrality";

export interface SearchHit {
  id: string;
  title: string;
  authors: string[];
  journal: string | null;
  issn: string | null;
  year: number | null;
  base_score: number;
  score: number;
  explain: string[];
}

export interface DescriptorFacet {
  descriptor: string;
  count: number;
}

export interface SearchResponse {
  query: string;
  rerank: RerankMode;
  expansion: string[];
  total: number;
  offset: number;
  k: number;
  hits: SearchHit[];
  descriptor_facets: DescriptorFacet[];
  took_ms: number;
}

export interface Suggestion {
  descriptor: string;
  score: number;
  support: number;
}

export interface JournalRow {
  issn: string;
  journal: string | null;
  count: number;
  doc_ids: string[];
}

export interface AuthorRow {
  author: string;
  betweenness: number;
  doc_count: number;
}

export interface DocRecord {
  id: string;
  title: string;
  abstract: string;
  authors: string[];
  issn: string | null;
  journal_title: string | null;
  descriptors: string[];
  language: string | null;
  year: number | null;
}

export interface SearchParams {
  q: string;
  rerank: RerankMode;
  expand: "off" | "auto" | "terms";
  terms: string[];
  k?: number;
  offset?: number;
}

async function getJson<T>(url: string): Promise<T> {
  const resp = await fetch(url);
  if (!resp.ok) {
    throw new Error(`${url} -> HTTP ${resp.status}`);
  }
  return (await resp.json()) as T;
}

export class ApiClient {
  constructor(private baseUrl: string = "") {}

  search(params: SearchParams): Promise<SearchResponse> {
    const qs = new URLSearchParams({ q: params.q, rerank: params.rerank });
    if (params.expand === "auto") {
      qs.set("expand", "auto");
    } else if (params.expand === "terms" && params.terms.length > 0) {
      qs.set("expand", `terms=${params.terms.join(",")}`);
    }
    if (params.k !== undefined) qs.set("k", String(params.k));
    if (params.offset !== undefined) qs.set("offset", String(params.offset));
    return getJson(`${this.baseUrl}/api/search?${qs}`);
  }

  async suggest(q: string, k = 20): Promise<Suggestion[]> {
    const qs = new URLSearchParams({ q, k: String(k) });
    const body = await getJson<{ suggestions: Suggestion[] }>(
      `${this.baseUrl}/api/suggest?${qs}`,
    );
    return body.suggestions;
  }

  async journals(q: string, k = 20): Promise<JournalRow[]> {
    const qs = new URLSearchParams({ q, k: String(k) });
    const body = await getJson<{ journals: JournalRow[] }>(
      `${this.baseUrl}/api/journals?${qs}`,
    );
    return body.journals;
  }

  async authors(q: string, k = 20): Promise<AuthorRow[]> {
    const qs = new URLSearchParams({ q, k: String(k) });
    const body = await getJson<{ authors: AuthorRow[] }>(
      `${this.baseUrl}/api/authors?${qs}`,
    );
    return body.authors;
  }

  doc(id: string): Promise<DocRecord> {
    return getJson(`${this.baseUrl}/api/doc/${encodeURIComponent(id)}`);
  }
}
