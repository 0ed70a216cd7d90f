"""HTTP JSON API over an immutable snapshot.

Endpoints: /api/search, /api/suggest, /api/journals, /api/authors,
/api/doc/{id}, /api/health.  The pipeline order is fixed: expansion, then
base search, then re-ranking.  Re-ranking is applied to the full matched
set (capped at 1000 documents) before pagination, so facet counts and
journal groups are not page-local.

The API is stateless; the iterative refinement loop lives in the client,
which resubmits enriched queries.  Configuration via STRATAGEM_ADDR and
STRATAGEM_CORPUS environment variables or CLI flags.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from fastapi.middleware.cors import CORSMiddleware
from fastapi.staticfiles import StaticFiles

from .bradford import bradfordize, journal_table
from .centrality import author_table, build_graph, centrality_rerank
from .index import ResultSet, facet_count, search, search_expanded, tokenize
from .recommender import expand_query, suggest
from .snapshot import Snapshot

RERANK_MODES = ("none", "bradford", "centrality")
MAX_RERANK_SET = 1000
MAX_PAGE = 1000
MAX_SUGGEST = 100


class BadRequest(Exception):
    def __init__(self, code: str, message: str):
        self.code = code
        self.message = message
        super().__init__(message)


@dataclass
class SearchRequest:
    q: str = ""
    rerank: str = "none"
    expand: str = "off"  # off | auto | terms=<comma list>
    terms: tuple[str, ...] = ()
    k: int = 50
    offset: int = 0


def parse_search_request(params: dict[str, str]) -> SearchRequest:
    req = SearchRequest(q=params.get("q", ""))
    rerank = params.get("rerank", "none")
    if rerank not in RERANK_MODES:
        raise BadRequest("invalid_rerank", f"rerank must be one of {RERANK_MODES}")
    req.rerank = rerank
    expand = params.get("expand", "off")
    if expand in ("off", "auto"):
        req.expand = expand
    elif expand.startswith("terms="):
        req.expand = "terms"
        req.terms = tuple(t for t in expand[len("terms="):].split(",") if t)
    else:
        raise BadRequest("invalid_expand", "expand must be off, auto or terms=<list>")
    try:
        req.k = int(params.get("k", "50"))
        req.offset = int(params.get("offset", "0"))
    except ValueError:
        raise BadRequest("invalid_integer", "k and offset must be integers")
    if req.k < 0 or req.k > MAX_PAGE:
        raise BadRequest("invalid_k", f"k must be between 0 and {MAX_PAGE}")
    if req.offset < 0:
        raise BadRequest("invalid_offset", "offset must be non-negative")
    return req


def count_matches(snap: Snapshot, q: str, descriptors: tuple[str, ...] = ()) -> int:
    index = snap.index
    matched: set[str] = set()
    for t in set(tokenize(q, index.stopwords)):
        if t in index.postings:
            ords = index.postings[t][0]
            matched.update(index.doc_ids[int(o)] for o in ords)
    for d in set(descriptors):
        matched.update(index.facet_descriptor.get(d, ()))
    return len(matched)


def run_search(snap: Snapshot, req: SearchRequest) -> tuple[ResultSet, list[str], int]:
    """Run the full pipeline; returns (reranked full set, applied
    expansion terms, total match count)."""
    applied: list[str] = []
    if req.expand == "auto":
        suggestions = suggest(snap.model, req.q, 10)
        applied = list(expand_query(req.q, suggestions, "automatic").descriptors)
    elif req.expand == "terms":
        applied = list(req.terms)

    if applied:
        full = search_expanded(snap.index, req.q, applied, MAX_RERANK_SET)
    else:
        full = search(snap.index, req.q, MAX_RERANK_SET)
    total = count_matches(snap, req.q, tuple(applied))

    if req.rerank == "bradford":
        full = bradfordize(full, snap.index)
    elif req.rerank == "centrality":
        graph = build_graph(full, snap.corpus)
        full = centrality_rerank(full, graph, snap.corpus)
    return full, applied, total


def _hit_obj(snap: Snapshot, hit) -> dict:
    rec = snap.corpus.by_id[hit.doc_id]
    return {
        "id": rec.id,
        "title": rec.title,
        "authors": list(rec.authors),
        "journal": rec.journal_title,
        "issn": rec.issn,
        "year": rec.year,
        "base_score": hit.base_score,
        "score": hit.score,
        "explain": list(hit.explain),
    }


def create_app(snapshot: Snapshot | None = None, ui_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="stratagem", docs_url=None, redoc_url=None)
    app.state.snapshot = snapshot
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(BadRequest)
    async def bad_request_handler(request: Request, exc: BadRequest):
        return JSONResponse(
            status_code=400,
            content={"error": {"code": exc.code, "message": exc.message}},
        )

    def get_snapshot() -> Snapshot:
        snap = app.state.snapshot
        if snap is None:
            raise _Loading()
        return snap

    class _Loading(Exception):
        pass

    @app.exception_handler(_Loading)
    async def loading_handler(request: Request, exc: _Loading):
        return JSONResponse(
            status_code=503,
            content={"error": {"code": "loading", "message": "index is loading"}},
        )

    @app.get("/api/health")
    async def health():
        ready = app.state.snapshot is not None
        return {"status": "ok" if ready else "loading", "ready": ready}

    @app.get("/api/search")
    async def api_search(request: Request):
        snap = get_snapshot()
        req = parse_search_request(dict(request.query_params))
        t0 = time.perf_counter()
        full, applied, total = run_search(snap, req)
        page = full.hits[req.offset : req.offset + req.k]
        desc_counts = facet_count(snap.index, full, "descriptor")
        facets = [
            {"descriptor": d, "count": c}
            for d, c in sorted(desc_counts.items(), key=lambda kv: (-kv[1], kv[0]))[:30]
        ]
        took_ms = (time.perf_counter() - t0) * 1000.0
        return {
            "query": req.q,
            "rerank": req.rerank,
            "expansion": applied,
            "total": total,
            "offset": req.offset,
            "k": req.k,
            "hits": [_hit_obj(snap, h) for h in page],
            "descriptor_facets": facets,
            "took_ms": round(took_ms, 3),
        }

    @app.get("/api/suggest")
    async def api_suggest(request: Request):
        snap = get_snapshot()
        q = request.query_params.get("q", "")
        try:
            k = int(request.query_params.get("k", "20"))
        except ValueError:
            raise BadRequest("invalid_integer", "k must be an integer")
        if k < 0 or k > MAX_SUGGEST:
            raise BadRequest("invalid_k", f"k must be between 0 and {MAX_SUGGEST}")
        suggestions = suggest(snap.model, q, k)
        return {
            "query": q,
            "suggestions": [
                {"descriptor": s.descriptor, "score": s.score, "support": s.support}
                for s in suggestions
            ],
        }

    def _base_result(snap: Snapshot, q: str) -> ResultSet:
        return search(snap.index, q, MAX_RERANK_SET)

    @app.get("/api/journals")
    async def api_journals(request: Request):
        snap = get_snapshot()
        q = request.query_params.get("q", "")
        k = _parse_k(request, default=20)
        result = _base_result(snap, q)
        groups = journal_table(result, snap.index)[:k]
        titles = {
            rec.issn: rec.journal_title
            for rec in snap.corpus.records
            if rec.issn is not None
        }
        return {
            "query": q,
            "journals": [
                {
                    "issn": g.issn,
                    "journal": titles.get(g.issn),
                    "count": g.count,
                    "doc_ids": list(g.doc_ids),
                }
                for g in groups
            ],
        }

    @app.get("/api/authors")
    async def api_authors(request: Request):
        snap = get_snapshot()
        q = request.query_params.get("q", "")
        k = _parse_k(request, default=20)
        result = _base_result(snap, q)
        graph = build_graph(result, snap.corpus)
        ranks = author_table(result, graph, snap.corpus, k)
        return {
            "query": q,
            "authors": [
                {
                    "author": r.author,
                    "betweenness": r.betweenness,
                    "doc_count": r.doc_count,
                }
                for r in ranks
            ],
        }

    def _parse_k(request: Request, default: int) -> int:
        try:
            k = int(request.query_params.get("k", str(default)))
        except ValueError:
            raise BadRequest("invalid_integer", "k must be an integer")
        if k < 0 or k > MAX_PAGE:
            raise BadRequest("invalid_k", f"k must be between 0 and {MAX_PAGE}")
        return k

    @app.get("/api/doc/{doc_id}")
    async def api_doc(doc_id: str):
        snap = get_snapshot()
        rec = snap.corpus.by_id.get(doc_id)
        if rec is None:
            return JSONResponse(
                status_code=404,
                content={"error": {"code": "not_found", "message": f"no document {doc_id!r}"}},
            )
        return {
            "id": rec.id,
            "title": rec.title,
            "abstract": rec.abstract,
            "authors": list(rec.authors),
            "issn": rec.issn,
            "journal_title": rec.journal_title,
            "descriptors": list(rec.descriptors),
            "language": rec.language,
            "year": rec.year,
        }

    if ui_dir and os.path.isdir(ui_dir):
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
