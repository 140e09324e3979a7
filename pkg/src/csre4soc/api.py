"""HTTP service: catalog retrieval, assessment submission, history, evolution.

Thin wire layer over the pure core — no arithmetic happens here. Bodies are
parsed by the same strict parsers the CLI uses, and every non-2xx response
carries one machine-readable code from the closed taxonomy.

The catalog is loaded once at startup; changing it means restarting.
"""

from __future__ import annotations

import uuid
from datetime import datetime, timezone
from typing import Callable

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from starlette.exceptions import HTTPException as StarletteHTTPException

from .catalog import ActionCatalog, catalog_digest, catalog_doc, parse_submission, validate_submission
from .errors import ScorecardError
from .history import AssessmentRecord, RecordStore, evolution_doc, record_doc
from .recommendations import recommend, recommendations_doc
from .scoring import assess, result_doc
from .serialization import dumps

API_PREFIX = "/api/v1"

_STATUS_BY_CODE = {
    "malformed_document": 400,
    "schema_violation": 400,
    "invariant_violation": 400,
    "unknown_action_id": 422,
    "empty_company_id": 422,
    "duplicate_record_id": 409,
    "storage_failure": 500,
}


def _default_id_factory() -> str:
    return str(uuid.uuid4())


def _default_clock() -> datetime:
    return datetime.now(timezone.utc).replace(microsecond=0)


def _error_response(status: int, code: str, detail: str, path: str | None = None) -> JSONResponse:
    return JSONResponse(
        {"status": status, "code": code, "detail": detail, "path": path},
        status_code=status,
    )


def create_app(
    catalog: ActionCatalog,
    store: RecordStore,
    *,
    id_factory: Callable[[], str] | None = None,
    clock: Callable[[], datetime] | None = None,
) -> FastAPI:
    """Build the service around an already-validated catalog and an open store.

    id_factory and clock exist so tests can pin record ids and stored_at
    timestamps; production uses uuid4 and the system clock.
    """
    new_record_id = id_factory or _default_id_factory
    now = clock or _default_clock

    app = FastAPI(title="csre4soc", docs_url=None, redoc_url=None, openapi_url=None)

    # Serialized once: byte-identical across calls until restart.
    digest = catalog_digest(catalog)
    catalog_body = dumps({"catalog": catalog_doc(catalog), "digest": digest}).encode("utf-8")

    @app.exception_handler(ScorecardError)
    async def scorecard_error(request: Request, exc: ScorecardError) -> JSONResponse:
        status = _STATUS_BY_CODE.get(exc.code, 500)
        return _error_response(status, exc.code, exc.detail, exc.path)

    @app.exception_handler(StarletteHTTPException)
    async def router_error(request: Request, exc: StarletteHTTPException) -> JSONResponse:
        # Unknown path or method: keep the router's status, speak our taxonomy.
        return _error_response(exc.status_code, "not_found", str(exc.detail), None)

    @app.get(f"{API_PREFIX}/health")
    async def health() -> JSONResponse:
        return JSONResponse("ok")

    @app.get(f"{API_PREFIX}/catalog")
    async def get_catalog() -> Response:
        return Response(content=catalog_body, media_type="application/json")

    @app.post(f"{API_PREFIX}/assessments", status_code=201)
    async def post_assessment(request: Request) -> JSONResponse:
        body = await request.body()
        submission = validate_submission(parse_submission(body), catalog)
        result = assess(submission, catalog)
        recommendations = recommend(submission, catalog)
        record = AssessmentRecord(
            record_id=new_record_id(),
            submission=submission,
            result=result,
            stored_at=now(),
        )
        # Validate-then-write: nothing above persists anything.
        store.append(record)
        return JSONResponse(
            {
                "record_id": record.record_id,
                "result": result_doc(result),
                "recommendations": recommendations_doc(recommendations),
            },
            status_code=201,
        )

    @app.get(API_PREFIX + "/companies/{company_id}/assessments")
    async def get_history(company_id: str) -> JSONResponse:
        records = store.list_assessments(company_id)
        return JSONResponse([record_doc(r) for r in records])

    @app.get(API_PREFIX + "/companies/{company_id}/evolution")
    async def get_evolution(company_id: str) -> JSONResponse:
        return JSONResponse(evolution_doc(store.evolution(company_id)))

    return app
