"""Co-authorship graph and betweenness-based re-ranking.

The graph is built per result set: one node per distinct normalized author
name, one edge per author pair sharing at least one hit document.  Edge
weights count shared documents but are informational only; betweenness is
the standard unweighted measure (Brandes), unnormalized -- normalization
is a monotone per-graph rescaling and cannot change any ranking.

Author identity is exact normalized-string match; the data gives us no
way to split homonyms or merge name variants.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .corpus import Corpus
from .index import Hit, ResultSet


@dataclass
class CoauthorGraph:
    nodes: dict[str, int] = field(default_factory=dict)  # author -> index
    edges: dict[tuple[int, int], int] = field(default_factory=dict)  # weight
    betweenness: list[float] = field(default_factory=list)

    def author_betweenness(self, author: str) -> float:
        i = self.nodes.get(author)
        return self.betweenness[i] if i is not None else 0.0


def _csr(n: int, edges: dict[tuple[int, int], int]) -> tuple[np.ndarray, np.ndarray]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for (i, j) in edges:
        adj[i].append(j)
        adj[j].append(i)
    indptr = np.zeros(n + 1, dtype=np.int32)
    for i in range(n):
        adj[i].sort()  # fixed neighbor order keeps accumulation deterministic
        indptr[i + 1] = indptr[i] + len(adj[i])
    indices = np.array([w for nbrs in adj for w in nbrs], dtype=np.int32)
    return indptr, indices


def build_graph(result: ResultSet, corpus: Corpus) -> CoauthorGraph:
    """Co-authorship graph over the result set's documents, betweenness
    included."""
    graph = CoauthorGraph()
    for hit in result.hits:
        rec = corpus.by_id[hit.doc_id]
        idxs = []
        for author in rec.authors:
            if author not in graph.nodes:
                graph.nodes[author] = len(graph.nodes)
            idxs.append(graph.nodes[author])
        for a in range(len(idxs)):
            for b in range(a + 1, len(idxs)):
                key = (min(idxs[a], idxs[b]), max(idxs[a], idxs[b]))
                graph.edges[key] = graph.edges.get(key, 0) + 1
    graph.betweenness = betweenness(graph)
    return graph


def betweenness(graph: CoauthorGraph) -> list[float]:
    """Unnormalized betweenness per node index (Brandes on the unweighted
    undirected graph)."""
    n = len(graph.nodes)
    indptr, indices = _csr(n, graph.edges)
    return list(_kernels.brandes(n, indptr, indices))


def _doc_centrality(rec_authors: tuple[str, ...], graph: CoauthorGraph, combine: str) -> float:
    values = [graph.author_betweenness(a) for a in rec_authors]
    if not values:
        return 0.0
    if combine == "max":
        return max(values)
    if combine == "sum":
        return sum(values)
    raise ValueError(f"unknown combine mode {combine!r}")


def centrality_rerank(
    result: ResultSet,
    graph: CoauthorGraph,
    corpus: Corpus,
    combine: str = "max",
) -> ResultSet:
    """Re-rank by author betweenness (max over a document's authors by
    default); ties fall back to base score, then doc id."""
    scored = [
        (h, _doc_centrality(corpus.by_id[h.doc_id].authors, graph, combine))
        for h in result.hits
    ]
    scored.sort(key=lambda hs: (-hs[1], -hs[0].base_score, hs[0].doc_id))
    hits = [
        Hit(h.doc_id, h.base_score, c, h.explain + ("centrality",))
        for h, c in scored
    ]
    return ResultSet(query=result.query, hits=hits)


@dataclass(frozen=True)
class AuthorRank:
    author: str
    betweenness: float
    doc_count: int


def author_table(
    result: ResultSet, graph: CoauthorGraph, corpus: Corpus, k: int
) -> list[AuthorRank]:
    """Top-k authors by betweenness (name-ascending on ties), with their
    document counts within the result set."""
    if k < 0:
        raise ValueError("k must be >= 0")
    doc_count: dict[str, int] = {}
    for hit in result.hits:
        for author in corpus.by_id[hit.doc_id].authors:
            doc_count[author] = doc_count.get(author, 0) + 1
    ranked = sorted(
        graph.nodes, key=lambda a: (-graph.author_betweenness(a), a)
    )
    return [
        AuthorRank(a, graph.author_betweenness(a), doc_count.get(a, 0))
        for a in ranked[:k]
    ]


def export_edge_list(graph: CoauthorGraph, path: str) -> None:
    """Write author<TAB>author<TAB>weight lines, one per edge."""
    idx_to_name = {i: a for a, i in graph.nodes.items()}
    with open(path, "w", encoding="utf-8") as fh:
        for (i, j), w in sorted(graph.edges.items()):
            fh.write(f"{idx_to_name[i]}\t{idx_to_name[j]}\t{w}\n")
