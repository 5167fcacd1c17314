"""HTTP API over a loaded index: search, documents, graphs, suggestions.

All state is read-only after startup, every endpoint is a pure function of
its query parameters, and every response body is application/json.  Errors
come back as ``{"error": "..."}`` with a 4xx status.  Responses carry
permissive CORS headers so a separately hosted UI can call the API.
"""

from __future__ import annotations

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from starlette.exceptions import HTTPException as StarletteHTTPException

from .cooccur import DEFAULT_NEIGHBORS, MEASURES, PairStats
from .corpus import make_document, tokenize
from .ergraph import export_graph, neighbor_graph
from .index import Index
from .keywords import (
    DEFAULT_K,
    DEFAULT_MAX_N,
    DEFAULT_VARIANT,
    combine_ngrams,
    extract_keywords,
    highlight_spans,
    idf,
)

DEFAULT_HOST = "127.0.0.1"
DEFAULT_PORT = 8080


def search_scores(index: Index, query_terms: list[str]) -> dict[str, float]:
    """Additive squared-variant score of each document over the distinct query terms."""
    scores: dict[str, float] = {}
    for term in sorted(set(query_terms)):
        posting = index.postings.get(term)
        if not posting:
            continue
        term_idf = idf(index, term)
        for doc_id, tf in posting:
            scores[doc_id] = scores.get(doc_id, 0.0) + (tf * tf + term_idf) / index.doc_len[doc_id]
    return scores


def seed_terms(raw_terms: list[str], index: Index) -> list[str]:
    """Normalize raw graph seed parameters with the corpus tokenizer.

    A multi-word parameter contributes one seed per kept token, in order.
    """
    seeds = []
    for raw in raw_terms:
        seeds.extend(token.term for token in tokenize(raw, index.config))
    return seeds


def create_app(
    index: Index,
    pair_stats: list[PairStats],
    keyword_k: int = DEFAULT_K,
    variant: str = DEFAULT_VARIANT,
    max_n: int = DEFAULT_MAX_N,
) -> FastAPI:
    app = FastAPI(title="conceptgraph", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(StarletteHTTPException)
    async def http_error(request: Request, exc: StarletteHTTPException):
        return JSONResponse({"error": str(exc.detail)}, status_code=exc.status_code)

    @app.exception_handler(RequestValidationError)
    async def validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse({"error": "invalid request parameters"}, status_code=400)

    def error(status: int, message: str) -> JSONResponse:
        return JSONResponse({"error": message}, status_code=status)

    @app.get("/api/health")
    def health():
        return {"status": "ok", "docs": index.n}

    @app.get("/api/search")
    def search(q: str = Query(""), limit: int = Query(10, ge=1)):
        terms = [token.term for token in tokenize(q, index.config)]
        if not terms:
            return error(400, "query is empty after tokenization")
        scores = search_scores(index, terms)
        ranked = sorted(scores.items(), key=lambda item: (-item[1], item[0]))[:limit]
        results = [
            {
                "doc_id": doc_id,
                "title": index.doc_meta[doc_id][0],
                "score": score,
                "snippet": index.doc_meta[doc_id][1][:200],
            }
            for doc_id, score in ranked
        ]
        return {"results": results}

    @app.get("/api/documents/{doc_id}")
    def get_document(doc_id: str):
        if doc_id not in index.doc_meta:
            return error(404, f"unknown document id {doc_id!r}")
        title, text = index.doc_meta[doc_id]
        doc = make_document(doc_id, title, text, index.config)
        keywords = extract_keywords(index, doc_id, keyword_k, variant)
        phrases = combine_ngrams(doc, keywords, max_n)
        return {
            "doc_id": doc_id,
            "title": title,
            "text": text,
            "keyphrases": [
                {"terms": list(p.terms), "score": p.score, "spans": [list(s) for s in p.spans]}
                for p in phrases
            ],
            "highlights": [list(span) for span in highlight_spans(doc, phrases)],
        }

    @app.get("/api/graph")
    def get_graph(
        term: list[str] = Query([]),
        measure: str = Query("pmi"),
        k: int = Query(DEFAULT_NEIGHBORS, ge=1),
        depth: int = Query(1, ge=1),
    ):
        if measure not in MEASURES:
            return error(400, f"unknown measure {measure!r} (expected one of {', '.join(MEASURES)})")
        seeds = seed_terms(term, index)
        body = export_graph(neighbor_graph(pair_stats, seeds, measure, k, depth), "json")
        return Response(content=body, media_type="application/json")

    @app.get("/api/suggest")
    def suggest(prefix: str = Query(""), limit: int = Query(10, ge=1)):
        terms = sorted(t for t in index.postings if t.startswith(prefix))[:limit]
        return {"terms": terms}

    return app


def serve(app: FastAPI, host: str = DEFAULT_HOST, port: int = DEFAULT_PORT) -> None:
    import uvicorn

    uvicorn.run(app, host=host, port=port, log_level="info")
