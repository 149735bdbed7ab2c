"""Local HTTP service backing the review UI.

Serves the report verbatim, the tau-filtered review queue, and the
post-review verdict; analyst decisions are appended to a JSONL log and the
report file itself is never touched.
"""

from __future__ import annotations

import json
import threading
from datetime import datetime, timezone
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.responses import HTMLResponse, Response
from fastapi.staticfiles import StaticFiles

from .catalog import Catalog
from .engine import SATISFIED, VIOLATED, ComplianceResult, RequirementResult, StatementMatch
from .report import (
    ReviewDecision,
    ReviewError,
    ReviewSession,
    append_review_log,
    apply_reviews,
    build_review_queue,
    load_review_log,
    queue_dict,
    result_from_dict,
)

_FALLBACK_PAGE = """<!doctype html>
<html><head><title>dpacheck review API</title></head>
<body><h1>dpacheck review API</h1>
<p>No UI bundle configured. Endpoints:</p>
<ul>
<li>GET /api/report</li>
<li>GET /api/queue?tau=0.5</li>
<li>POST /api/review {"req": "R8", "stmt": "s3", "decision": "accept|reject", "reviewer": "name"}</li>
<li>GET /api/verdict</li>
</ul></body></html>
"""


def _result_from_report(report: dict) -> ComplianceResult:
    """Degraded reconstruction when no result.json sidecar exists: the best
    evidence statement is the only known evidence."""
    results = []
    for entry in report["entries"]:
        best = None
        evidence = ()
        if entry.get("evidence"):
            best = StatementMatch(
                statement_id=entry["evidence"]["statement_id"],
                text=entry["evidence"].get("text", ""),
                predicate_matched_by="overlap",
                matched_roles=(),
                missing_roles=tuple(entry.get("missing_roles", ())),
                degree=float(entry["score"]),
            )
            evidence = (best,)
        results.append(
            RequirementResult(
                requirement_id=entry["id"],
                status=entry["status"],
                score=float(entry["score"]),
                best=best,
                evidence=evidence,
            )
        )
    return ComplianceResult(
        document_id=report["document_id"],
        results=tuple(results),
        verdict=report["verdict"],
        warnings=tuple(report.get("warnings", ())),
        statement_count=int(report.get("statement_count", 0)),
    )


def build_app(
    report_path: Path,
    result_path: Path | None,
    reviews_path: Path,
    catalog: Catalog,
    ui_dir: Path | None = None,
) -> FastAPI:
    app = FastAPI(title="dpacheck review service")
    report_bytes = report_path.read_bytes()
    report = json.loads(report_bytes)
    if result_path is not None:
        base_result = result_from_dict(json.loads(result_path.read_text(encoding="utf-8")))
    else:
        base_result = _result_from_report(report)
    write_lock = threading.Lock()

    def current_session() -> ReviewSession:
        return ReviewSession(document_id=base_result.document_id, decisions=tuple(load_review_log(reviews_path)))

    def reviewed_result() -> ComplianceResult:
        return apply_reviews(base_result, current_session(), catalog)

    @app.get("/api/report")
    def get_report() -> Response:
        return Response(content=report_bytes, media_type="application/json")

    @app.get("/api/queue")
    def get_queue(tau: float = Query(default=0.5, ge=0.0, le=1.0)) -> Response:
        result = reviewed_result()
        queue = build_review_queue(result, tau)
        payload = queue_dict(queue)
        decisions = current_session().effective()
        for item in payload["items"]:
            decision = decisions.get((item["requirement_id"], item["statement_id"]))
            item["decision"] = decision.decision if decision else "pending"
        return Response(content=json.dumps(payload, sort_keys=True), media_type="application/json")

    @app.post("/api/review")
    async def post_review(request: Request) -> dict:
        try:
            body = await request.json()
        except json.JSONDecodeError:
            raise HTTPException(status_code=400, detail="body must be JSON")
        for key in ("req", "stmt", "decision"):
            if key not in body:
                raise HTTPException(status_code=400, detail=f"missing field {key!r}")
        decision = ReviewDecision(
            requirement_id=str(body["req"]),
            statement_id=str(body["stmt"]),
            decision=str(body["decision"]),
            reviewer=str(body.get("reviewer", "")),
            ts=datetime.now(timezone.utc).isoformat(),
        )
        candidate = ReviewSession(
            document_id=base_result.document_id,
            decisions=tuple(load_review_log(reviews_path)) + (decision,),
        )
        try:
            updated = apply_reviews(base_result, candidate, catalog)
        except ReviewError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        with write_lock:
            append_review_log(reviews_path, decision)
        return {"ok": True, "verdict": updated.verdict}

    @app.get("/api/verdict")
    def get_verdict() -> dict:
        result = reviewed_result()
        return {
            "document_id": result.document_id,
            "verdict": result.verdict,
            "warnings": list(result.warnings),
            "satisfied": sum(1 for r in result.results if r.status == SATISFIED),
            "violated": sum(1 for r in result.results if r.status == VIOLATED),
            "audited": sum(1 for r in result.results if r.audited),
        }

    if ui_dir is not None and ui_dir.exists():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")
    else:

        @app.get("/", response_class=HTMLResponse)
        def index() -> str:
            return _FALLBACK_PAGE

    return app
