/** Result list; rendering never reorders the API response. */

import type { ApiClient, SearchHit } from "./api.js";

export function renderResults(
  container: HTMLElement,
  hits: SearchHit[],
  api: ApiClient,
): void {
  container.textContent = "";
  const doc = container.ownerDocument;
  if (hits.length === 0) {
    const p = doc.createElement("p");
    p.className = "empty-state";
    p.textContent = "No results.";
    container.appendChild(p);
    return;
  }
  const list = doc.createElement("ol");
  list.className = "result-list";
  for (const hit of hits) {
    const li = doc.createElement("li");
    li.className = "result";
    li.dataset.docId = hit.id;

    const title = doc.createElement("span");
    title.className = "result-title";
    title.textContent = hit.title;
    li.appendChild(title);

    const meta = doc.createElement("span");
    meta.className = "result-meta";
    const journal = hit.journal ? ` in ${hit.journal}` : "";
    const issn = hit.issn ? ` (${hit.issn})` : "";
    const year = hit.year !== null ? ` ${hit.year}` : "";
    meta.textContent = ` — ${hit.authors.join("; ")}${journal}${year}${issn}`;
    li.appendChild(meta);

    const score = doc.createElement("span");
    score.className = "result-score";
    score.textContent = ` [${hit.explain.join("+")}: ${hit.score.toFixed(3)}]`;
    li.appendChild(score);

    const toggle = doc.createElement("a");
    toggle.href = "#";
    toggle.className = "abstract-toggle";
    toggle.textContent = " toggle abstract";
    const abstract = doc.createElement("p");
    abstract.className = "abstract";
    abstract.hidden = true;
    toggle.addEventListener("click", async (ev) => {
      ev.preventDefault();
      if (abstract.hidden && abstract.textContent === "") {
        const rec = await api.doc(hit.id);
        abstract.textContent = rec.abstract || "(no abstract)";
      }
      abstract.hidden = !abstract.hidden;
    });
    li.appendChild(toggle);
    li.appendChild(abstract);
    list.appendChild(li);
  }
  container.appendChild(list);
}
