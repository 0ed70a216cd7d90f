"""Inverted index, BM25 base ranking and facet counting.

The base ranker is BM25 (k1=1.2, b=0.75 by default) with OR semantics over
query tokens; documents matching no token are excluded.  All orderings are
deterministic: score descending, ties broken by doc id ascending.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import math

import numpy as np

from . import _kernels
from .corpus import Corpus

DEFAULT_STOPWORDS = frozenset(
    """a an and are as at be by for from has he in is it its of on or
    that the to was were will with""".split()
)

def tokenize(text: str, stopwords: frozenset[str] = DEFAULT_STOPWORDS) -> list[str]:
    """Lowercase, split on non-alphanumerics, drop tokens shorter than 2
    characters and stopwords."""
    tokens: list[str] = []
    word: list[str] = []
    for ch in text.lower():
        if ch.isalnum():
            word.append(ch)
        elif word:
            tokens.append("".join(word))
            word = []
    if word:
        tokens.append("".join(word))
    return [t for t in tokens if len(t) >= 2 and t not in stopwords]


@dataclass(frozen=True)
class Hit:
    doc_id: str
    base_score: float
    score: float
    explain: tuple[str, ...] = ("base",)


@dataclass
class ResultSet:
    query: str
    hits: list[Hit] = field(default_factory=list)

    def doc_ids(self) -> list[str]:
        return [h.doc_id for h in self.hits]


class IndexError_(Exception):
    """Internal consistency error (unknown doc id etc.)."""


class Index:
    """Immutable inverted index over title + abstract, with ISSN and
    descriptor facet fields."""

    def __init__(
        self,
        doc_ids: list[str],
        postings: dict[str, tuple[np.ndarray, np.ndarray]],
        doc_len_arr: np.ndarray,
        facet_issn: dict[str, list[str]],
        facet_descriptor: dict[str, list[str]],
        k1: float = 1.2,
        b: float = 0.75,
        stopwords: frozenset[str] = DEFAULT_STOPWORDS,
    ):
        self.doc_ids = doc_ids
        self.ordinal = {d: i for i, d in enumerate(doc_ids)}
        self.postings = postings
        self._doc_len = doc_len_arr
        self.n_docs = len(doc_ids)
        self.avg_doc_len = float(doc_len_arr.mean()) if self.n_docs else 0.0
        self.facet_issn = facet_issn
        self.facet_descriptor = facet_descriptor
        self.k1 = k1
        self.b = b
        self.stopwords = stopwords
        self.doc_issn = {
            d: issn for issn, ids in facet_issn.items() for d in ids
        }
        self.doc_descriptors: dict[str, set[str]] = {}
        for desc, ids in facet_descriptor.items():
            for d in ids:
                self.doc_descriptors.setdefault(d, set()).add(desc)

    @property
    def doc_len(self) -> dict[str, int]:
        return {d: int(self._doc_len[i]) for i, d in enumerate(self.doc_ids)}

    def idf(self, token: str) -> float:
        df = len(self.postings[token][0]) if token in self.postings else 0
        if df == 0:
            return 0.0
        return max(0.0, math.log((self.n_docs - df + 0.5) / (df + 0.5) + 1.0))


def build_index(
    corpus: Corpus,
    stopwords: frozenset[str] = DEFAULT_STOPWORDS,
    k1: float = 1.2,
    b: float = 0.75,
) -> Index:
    doc_ids = [rec.id for rec in corpus.records]
    raw: dict[str, list[tuple[int, int]]] = {}
    doc_len = np.zeros(len(doc_ids), dtype=np.int32)
    facet_issn: dict[str, list[str]] = {}
    facet_descriptor: dict[str, list[str]] = {}

    for i, rec in enumerate(corpus.records):
        tokens = tokenize(rec.title + " " + rec.abstract, stopwords)
        doc_len[i] = len(tokens)
        counts: dict[str, int] = {}
        for t in tokens:
            counts[t] = counts.get(t, 0) + 1
        for t, tf in counts.items():
            raw.setdefault(t, []).append((i, tf))
        if rec.issn is not None:
            bucket = facet_issn.setdefault(rec.issn, [])
            if rec.id not in bucket:
                bucket.append(rec.id)
        for desc in rec.descriptors:
            bucket = facet_descriptor.setdefault(desc, [])
            if rec.id not in bucket:
                bucket.append(rec.id)

    postings = {
        t: (
            np.array([o for o, _ in plist], dtype=np.int32),
            np.array([tf for _, tf in plist], dtype=np.int32),
        )
        for t, plist in raw.items()
    }
    return Index(
        doc_ids, postings, doc_len, facet_issn, facet_descriptor, k1, b, stopwords
    )


def _top_k(index: Index, scores: np.ndarray, candidates: np.ndarray, k: int) -> list[Hit]:
    ranked = sorted(
        (int(o) for o in candidates),
        key=lambda o: (-scores[o], index.doc_ids[o]),
    )
    return [
        Hit(doc_id=index.doc_ids[o], base_score=float(scores[o]), score=float(scores[o]))
        for o in ranked[:k]
    ]


def search(index: Index, query: str, k: int) -> ResultSet:
    """Top-k BM25 over OR semantics of the query tokens."""
    if k < 0:
        raise ValueError("k must be >= 0")
    tokens = tokenize(query, index.stopwords)
    if not tokens or k == 0 or index.n_docs == 0:
        return ResultSet(query=query)
    scores = np.zeros(index.n_docs, dtype=np.float64)
    matched: set[int] = set()
    for t in sorted(set(tokens)):
        if t not in index.postings:
            continue
        ords, tfs = index.postings[t]
        _kernels.bm25_add(
            ords, tfs, index.idf(t), index.k1, index.b,
            index._doc_len, index.avg_doc_len, scores,
        )
        matched.update(int(o) for o in ords)
    candidates = np.array(sorted(matched), dtype=np.int32)
    return ResultSet(query=query, hits=_top_k(index, scores, candidates, k))


def search_expanded(
    index: Index,
    query: str,
    descriptors: list[str],
    k: int,
    descriptor_weight: float = 1.0,
) -> ResultSet:
    """BM25 over the query tokens OR-combined with descriptor-facet matches.

    Each chosen descriptor a document carries adds ``descriptor_weight`` to
    its BM25 score, so the expanded hit set is a superset of the base one.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if not descriptors:
        return search(index, query, k)
    tokens = tokenize(query, index.stopwords)
    if k == 0 or index.n_docs == 0:
        return ResultSet(query=query)
    scores = np.zeros(index.n_docs, dtype=np.float64)
    matched: set[int] = set()
    for t in sorted(set(tokens)):
        if t not in index.postings:
            continue
        ords, tfs = index.postings[t]
        _kernels.bm25_add(
            ords, tfs, index.idf(t), index.k1, index.b,
            index._doc_len, index.avg_doc_len, scores,
        )
        matched.update(int(o) for o in ords)
    for desc in sorted(set(descriptors)):
        for doc_id in index.facet_descriptor.get(desc, []):
            o = index.ordinal[doc_id]
            scores[o] += descriptor_weight
            matched.add(o)
    candidates = np.array(sorted(matched), dtype=np.int32)
    hits = _top_k(index, scores, candidates, k)
    hits = [
        Hit(h.doc_id, h.base_score, h.score, ("base", "expand")) for h in hits
    ]
    return ResultSet(query=query, hits=hits)


def facet_count(index: Index, result: ResultSet, fld: str) -> dict[str, int]:
    """Facet counts over the result's documents; docs lacking the field
    contribute to no bucket."""
    if fld not in ("issn", "descriptor"):
        raise ValueError(f"unknown facet field {fld!r}")
    counts: dict[str, int] = {}
    for hit in result.hits:
        if hit.doc_id not in index.ordinal:
            raise IndexError_(f"doc id {hit.doc_id!r} not in index")
        if fld == "issn":
            issn = index.doc_issn.get(hit.doc_id)
            if issn is not None:
                counts[issn] = counts.get(issn, 0) + 1
        else:
            for desc in index.doc_descriptors.get(hit.doc_id, ()):
                counts[desc] = counts.get(desc, 0) + 1
    return counts
