"""JSON-over-HTTP service, versioned under /api/v1.

Stateless per request; the only shared state is the read-only card
catalog loaded at startup. Instance payloads are validated by the same
codecs the CLI and the file loaders use, so error messages carry the
exact field path and identical inputs produce identical bodies.
"""
from __future__ import annotations

import json
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .errors import CapExceededError, ParseError, ValidationError
from .instances import CardCatalog, load_catalog
from .solvers import get_solver
from .sweep import run_sweep, sweep_to_dict
from .wire import (card_to_dict, instance_from_dict, lambda_from_dict,
                   solution_to_dict)


async def _json_body(request: Request) -> dict:
    try:
        body = await request.json()
    except json.JSONDecodeError as exc:
        raise ParseError(f"request body is not valid JSON: {exc.msg}") from None
    if not isinstance(body, dict):
        raise ValidationError("", "request body must be a JSON object")
    return body


def _solver_from(body: dict):
    name = body.get("solver", "auto")
    try:
        return get_solver(name)
    except ValueError as exc:
        raise ValidationError("solver", str(exc)) from None


def create_app(catalog: CardCatalog | None = None,
               frontend_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="fabopt", docs_url=None, redoc_url=None)
    app.state.catalog = catalog
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])

    @app.exception_handler(ValidationError)
    async def on_validation_error(_request, exc: ValidationError):
        return JSONResponse(status_code=400,
                            content={"error": "validation", "detail": str(exc)})

    @app.exception_handler(ParseError)
    async def on_parse_error(_request, exc: ParseError):
        return JSONResponse(status_code=400,
                            content={"error": "parse", "detail": str(exc)})

    @app.exception_handler(CapExceededError)
    async def on_cap_exceeded(_request, exc: CapExceededError):
        return JSONResponse(status_code=422,
                            content={"error": "cap_exceeded", "detail": str(exc),
                                     "cap": exc.cap, "required": exc.required})

    @app.get("/api/v1/health")
    async def health():
        return {"status": "ok"}

    @app.get("/api/v1/cards")
    async def cards(query: str = ""):
        catalog: CardCatalog | None = app.state.catalog
        matches = catalog.search(query) if catalog is not None else []
        return {"cards": [card_to_dict(card) for card in matches]}

    @app.post("/api/v1/solve")
    async def solve(request: Request):
        body = await _json_body(request)
        instance = instance_from_dict(body.get("instance"), "instance")
        report = _solver_from(body)(instance)
        return solution_to_dict(report.solution)

    @app.post("/api/v1/sweep")
    async def sweep(request: Request):
        body = await _json_body(request)
        instance = instance_from_dict(body.get("instance"), "instance")
        lambdas_raw = body.get("lambdas")
        if not isinstance(lambdas_raw, list) or not lambdas_raw:
            raise ValidationError("lambdas", "must be a non-empty list of {num, den}")
        lambdas = [lambda_from_dict(entry, f"lambdas[{i}]")
                   for i, entry in enumerate(lambdas_raw)]
        result = run_sweep(instance, lambdas, solver=_solver_from(body))
        return sweep_to_dict(result)

    if frontend_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=frontend_dir, html=True), name="frontend")

    return app


def run(port: int = 8000, host: str = "127.0.0.1",
        catalog_path: str | None = None,
        frontend_dir: str | None = None) -> None:
    import uvicorn

    catalog = load_catalog(catalog_path) if catalog_path else None
    app = create_app(catalog, frontend_dir=frontend_dir)
    uvicorn.run(app, host=host, port=port)
