"""Bradfordizing: push articles from core journals to the top.

Three steps over one result set: filter hits by ISSN, aggregate the ISSN
facet counts, then reorder so the journal with the highest count comes
first, the second-highest next, and so on.  Realized as group-then-stable
sort rather than additive score boosting, which guarantees the whole top
journal's articles actually lead the list.  Documents without an ISSN
(monographs, grey literature) trail in their original order; pass
drop_unjournaled=True to remove them instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .index import Hit, Index, ResultSet


@dataclass(frozen=True)
class JournalGroup:
    issn: str
    count: int
    doc_ids: tuple[str, ...]


def _groups(result: ResultSet, index: Index) -> list[JournalGroup]:
    members: dict[str, list[Hit]] = {}
    for hit in result.hits:
        issn = index.doc_issn.get(hit.doc_id)
        if issn is not None:
            members.setdefault(issn, []).append(hit)

    def sort_key(issn: str):
        best = max(h.base_score for h in members[issn])
        return (-len(members[issn]), -best, issn)

    return [
        JournalGroup(
            issn=issn,
            count=len(members[issn]),
            doc_ids=tuple(h.doc_id for h in members[issn]),
        )
        for issn in sorted(members, key=sort_key)
    ]


def journal_table(result: ResultSet, index: Index) -> list[JournalGroup]:
    """Journal groups in ranked order: facet count descending, ties broken
    by best member base score, then ISSN."""
    return _groups(result, index)


def bradfordize(
    result: ResultSet, index: Index, drop_unjournaled: bool = False
) -> ResultSet:
    """Re-rank a result set by journal facet count (permutation of the
    input; base scores untouched; stable within each journal)."""
    by_id = {h.doc_id: h for h in result.hits}
    groups = _groups(result, index)
    out: list[Hit] = []
    for g in groups:
        for doc_id in g.doc_ids:
            h = by_id[doc_id]
            out.append(
                Hit(h.doc_id, h.base_score, float(g.count), h.explain + ("bradford",))
            )
    if not drop_unjournaled:
        for h in result.hits:
            if index.doc_issn.get(h.doc_id) is None:
                out.append(Hit(h.doc_id, h.base_score, 0.0, h.explain + ("bradford",)))
    return ResultSet(query=result.query, hits=out)
