/** Right-column tabs: central journals and central persons tables. */

import type { AuthorRow, JournalRow } from "./api.js";

function emptyState(container: HTMLElement, message: string): void {
  const p = container.ownerDocument.createElement("p");
  p.className = "empty-state";
  p.textContent = message;
  container.appendChild(p);
}

export function renderJournalTable(
  container: HTMLElement,
  journals: JournalRow[],
): void {
  container.textContent = "";
  if (journals.length === 0) {
    emptyState(container, "No journals in this result set.");
    return;
  }
  const doc = container.ownerDocument;
  const table = doc.createElement("table");
  table.className = "journal-table";
  const head = table.createTHead().insertRow();
  for (const label of ["Journal", "ISSN", "Articles"]) {
    const th = doc.createElement("th");
    th.textContent = label;
    head.appendChild(th);
  }
  const body = table.createTBody();
  for (const j of journals) {
    const row = body.insertRow();
    row.insertCell().textContent = j.journal ?? "(untitled)";
    row.insertCell().textContent = j.issn;
    row.insertCell().textContent = String(j.count);
  }
  container.appendChild(table);
}

export function renderAuthorTable(
  container: HTMLElement,
  authors: AuthorRow[],
  onAuthorClick: (author: string) => void,
): void {
  container.textContent = "";
  if (authors.length === 0) {
    emptyState(container, "No authors in this result set.");
    return;
  }
  const doc = container.ownerDocument;
  const table = doc.createElement("table");
  table.className = "author-table";
  const head = table.createTHead().insertRow();
  for (const label of ["Author", "Betweenness", "Documents"]) {
    const th = doc.createElement("th");
    th.textContent = label;
    head.appendChild(th);
  }
  const body = table.createTBody();
  for (const a of authors) {
    const row = body.insertRow();
    const cell = row.insertCell();
    const link = doc.createElement("a");
    link.href = "#";
    link.className = "author-link";
    link.textContent = a.author;
    link.addEventListener("click", (ev) => {
      ev.preventDefault();
      onAuthorClick(a.author);
    });
    cell.appendChild(link);
    row.insertCell().textContent = a.betweenness.toFixed(2);
    row.insertCell().textContent = String(a.doc_count);
  }
  container.appendChild(table);
}
