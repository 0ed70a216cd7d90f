/** Term cloud: suggested descriptors rendered with font size monotone in
 *  association score; clicking a term feeds it back into the query. */

import type { Suggestion } from "./api.js";

const MIN_PX = 12;
const MAX_PX = 28;

export function fontSizeFor(
  score: number,
  minScore: number,
  maxScore: number,
): number {
  if (maxScore <= minScore) {
    return (MIN_PX + MAX_PX) / 2;
  }
  const t = (score - minScore) / (maxScore - minScore);
  return MIN_PX + t * (MAX_PX - MIN_PX);
}

export function renderTermCloud(
  container: HTMLElement,
  suggestions: Suggestion[],
  onTermClick: (descriptor: string) => void,
): void {
  container.textContent = "";
  if (suggestions.length === 0) {
    const p = container.ownerDocument.createElement("p");
    p.className = "empty-state";
    p.textContent = "No term suggestions for this query.";
    container.appendChild(p);
    return;
  }
  const scores = suggestions.map((s) => s.score);
  const min = Math.min(...scores);
  const max = Math.max(...scores);
  for (const s of suggestions) {
    const a = container.ownerDocument.createElement("a");
    a.href = "#";
    a.className = "cloud-term";
    a.textContent = s.descriptor;
    a.style.fontSize = `${fontSizeFor(s.score, min, max).toFixed(2)}px`;
    a.title = `score ${s.score.toFixed(2)}, ${s.support} documents`;
    a.addEventListener("click", (ev) => {
      ev.preventDefault();
      onTermClick(s.descriptor);
    });
    container.appendChild(a);
    container.appendChild(container.ownerDocument.createTextNode(" "));
  }
}
