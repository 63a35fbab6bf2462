"""Stateless HTTP facade over the store, builder, clustering, and analytics.

Every response is JSON. Graph responses are rendered with the canonical
encoder shared with the CLI, so identical logical requests (with a fixed
seed) produce byte-identical bodies.
"""

from __future__ import annotations

import os
from pathlib import Path

from fastapi import FastAPI, Query, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import analytics, evidence
from .builder import GraphParams, build_graph, dumps_canonical, graph_from_dict, graph_to_dict
from .clustering import DEFAULT_ITERATIONS, apply_clustering, chinese_whispers
from .errors import InvalidParamsError, NotFoundError
from .store import Store

DEFAULT_N = 100
DEFAULT_D = 20


class GraphRequest(BaseModel):
    corpus_id: str
    target: str
    variant: str = "interval"
    n: int = Field(default=DEFAULT_N, ge=1)
    d: int = Field(default=DEFAULT_D, ge=1)
    interval_indices: list[int] | None = None
    seed: int | None = None
    iterations: int = Field(default=DEFAULT_ITERATIONS, ge=1)


class TimeDiffRequest(GraphRequest):
    reference_interval: int
    graph: dict | None = None  # a previously built graph payload may be sent instead

    # corpus_id/target are unused when a graph payload is supplied
    corpus_id: str = ""
    target: str = ""


def _error(status: int, code: str, message: str, fields: list | None = None) -> JSONResponse:
    body: dict = {"code": code, "message": message}
    if fields:
        body["fields"] = fields
    return JSONResponse(status_code=status, content=body)


def create_app(
    store: Store | None = None,
    data_dir: str | Path | None = None,
    cors_origins: list[str] | None = None,
) -> FastAPI:
    """Build the application around one store instance."""
    if store is None:
        store = Store(data_dir or os.environ.get("SENSEGRAPH_DATA", "data"))

    app = FastAPI(title="sensegraph")
    app.state.store = store
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins or ["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(NotFoundError)
    async def not_found(request: Request, exc: NotFoundError):
        return _error(404, "not_found", str(exc))

    @app.exception_handler(InvalidParamsError)
    async def invalid_params(request: Request, exc: InvalidParamsError):
        return _error(422, "invalid_params", str(exc))

    @app.exception_handler(RequestValidationError)
    async def invalid_body(request: Request, exc: RequestValidationError):
        fields = [
            {"field": ".".join(str(p) for p in err["loc"]), "message": err["msg"]}
            for err in exc.errors()
        ]
        return _error(422, "invalid_params", "request validation failed", fields)

    def _params(req: GraphRequest) -> GraphParams:
        corpus = store.corpus(req.corpus_id)
        indices = req.interval_indices
        if indices is None:
            indices = corpus.interval_indices
        return GraphParams(
            target=req.target,
            variant=req.variant,
            n=req.n,
            d=req.d,
            intervals=tuple(indices),
        )

    def _graph_payload(req: GraphRequest) -> dict:
        corpus = store.corpus(req.corpus_id)
        graph = build_graph(corpus, _params(req))
        clustering = chinese_whispers(graph, req.iterations, req.seed)
        apply_clustering(graph, clustering)
        analytics.annotate_centrality(graph)
        return graph_to_dict(graph, clustering)

    def _canonical(doc: dict) -> Response:
        return Response(content=dumps_canonical(doc), media_type="application/json")

    @app.get("/api/corpora")
    def corpora():
        return [handle.to_json() for handle in store.corpora()]

    @app.get("/api/corpora/{corpus_id}/intervals")
    def intervals(corpus_id: str):
        corpus = store.corpus(corpus_id)
        return [iv.to_json() for iv in corpus.handle.intervals]

    @app.post("/api/graph")
    def graph(req: GraphRequest):
        return _canonical(_graph_payload(req))

    @app.post("/api/graph/recluster")
    def graph_recluster(req: GraphRequest):
        # identical pipeline; a missing seed draws a fresh one, which is
        # echoed in the clustering fragment for reproducibility
        return _canonical(_graph_payload(req))

    @app.post("/api/timediff")
    def timediff(req: TimeDiffRequest):
        if req.graph is not None:
            graph = graph_from_dict(req.graph)
        else:
            if not req.corpus_id or not req.target:
                raise InvalidParamsError("either a graph payload or corpus_id and target are required")
            corpus = store.corpus(req.corpus_id)
            graph = build_graph(corpus, _params(req))
        report = analytics.time_diff(graph, req.reference_interval)
        return report.to_json()

    @app.get("/api/features")
    def features(
        corpus: str,
        words: str,
        scope: str = "node",
        interval: int | None = None,
        limit: int = Query(default=50, ge=1),
    ):
        members = [w for w in words.split(",") if w]
        ranking = evidence.rank_features(store.corpus(corpus), members, scope, interval, limit)
        return ranking.to_json()

    @app.get("/api/sentences")
    def sentences(
        corpus: str,
        word: str,
        feature: str | None = None,
        interval: int | None = None,
        limit: int = Query(default=20, ge=1),
    ):
        records = store.corpus(corpus).query_sentences(word, feature, interval, limit)
        return [record.to_json() for record in records]

    ui_dir = os.environ.get("SENSEGRAPH_UI")
    if ui_dir and Path(ui_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/ui", StaticFiles(directory=ui_dir, html=True), name="ui")

    return app
