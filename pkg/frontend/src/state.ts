/** Session state lives in the URL query string so sessions are shareable
 *  and bookmarkable; reloading a URL restores the full state. */

import type { RerankMode } from "./api.js";

export interface SessionState {
  q: string;
  rerank: RerankMode;
  expand: "off" | "auto" | "terms";
  terms: string[]; // selected descriptors (expand === "terms")
}

export const DEFAULT_STATE: SessionState = {
  q: "",
  rerank: "none",
  expand: "off",
  terms: [],
};

const RERANK_MODES: RerankMode[] = ["none", "bradford", "centrality"];

export function toQueryString(state: SessionState): string {
  const qs = new URLSearchParams();
  if (state.q) qs.set("q", state.q);
  if (state.rerank !== "none") qs.set("rerank", state.rerank);
  if (state.expand === "auto") qs.set("expand", "auto");
  if (state.expand === "terms" && state.terms.length > 0) {
    qs.set("expand", "terms");
    qs.set("terms", state.terms.join(","));
  }
  const s = qs.toString();
  return s ? `?${s}` : "";
}

export function fromQueryString(search: string): SessionState {
  const qs = new URLSearchParams(search.startsWith("?") ? search.slice(1) : search);
  const rerank = qs.get("rerank") ?? "none";
  const expand = qs.get("expand") ?? "off";
  const terms =
    expand === "terms"
      ? (qs.get("terms") ?? "").split(",").filter((t) => t.length > 0)
      : [];
  return {
    q: qs.get("q") ?? "",
    rerank: RERANK_MODES.includes(rerank as RerankMode)
      ? (rerank as RerankMode)
      : "none",
    expand: expand === "auto" ? "auto" : terms.length > 0 ? "terms" : "off",
    terms,
  };
}
