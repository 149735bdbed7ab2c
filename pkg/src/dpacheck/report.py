"""Report rendering, the low-confidence review queue, analyst review sessions."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, replace
from datetime import datetime, timezone

from .catalog import Catalog
from .engine import (
    SATISFIED,
    SKIPPED,
    VIOLATED,
    ComplianceResult,
    RequirementResult,
    StatementMatch,
    decide_verdict,
)

ACCEPT = "accept"
REJECT = "reject"


# --- machine-readable report ---------------------------------------------------

def _entry(result: RequirementResult, catalog: Catalog) -> dict:
    req = catalog.lookup(result.requirement_id)
    recommendations: list[str] = []
    if result.status == SATISFIED and result.best is not None and req.frame is not None:
        missing = set(result.best.missing_roles)
        for arg in req.frame.args:
            if arg.role in missing:
                recommendations.append(f"Missing: {arg.role} — expected content like '{arg.text}'")
    evidence = None
    if result.best is not None:
        evidence = {"statement_id": result.best.statement_id, "text": result.best.text}
    return {
        "id": req.id,
        "code": req.code,
        "category": req.category,
        "mandatory": req.mandatory,
        "status": result.status,
        "score": round(result.score, 9),
        "evidence": evidence,
        "missing_roles": sorted(result.best.missing_roles) if result.best else [],
        "recommendations": recommendations,
        "gdpr_refs": list(req.gdpr_refs),
    }


def report_dict(result: ComplianceResult, catalog: Catalog, generated_at: str | None = None) -> dict:
    return {
        "document_id": result.document_id,
        "verdict": result.verdict,
        "generated_at": generated_at or datetime.now(timezone.utc).isoformat(),
        "warnings": list(result.warnings),
        "entries": [_entry(r, catalog) for r in result.results],
    }


def render_json(result: ComplianceResult, catalog: Catalog, generated_at: str | None = None) -> bytes:
    """Canonical JSON bytes; parse -> render round-trips identically."""
    payload = report_dict(result, catalog, generated_at)
    return (json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n").encode("utf-8")


def rerender_json(parsed: dict) -> bytes:
    return (json.dumps(parsed, indent=2, sort_keys=True, ensure_ascii=False) + "\n").encode("utf-8")


# --- human-readable report -------------------------------------------------------

_BANNERS = {
    "compliant": "COMPLIANT",
    "not_compliant": "NOT COMPLIANT",
    "indeterminate": "INDETERMINATE",
}


def render_text(result: ComplianceResult, catalog: Catalog) -> str:
    lines: list[str] = []
    lines.append("=" * 64)
    lines.append(f"DPA compliance report — {result.document_id}")
    lines.append(f"VERDICT: {_BANNERS[result.verdict]}")
    lines.append("=" * 64)

    violated_mandatory = [r for r in result.results if r.status == VIOLATED and catalog.lookup(r.requirement_id).mandatory]
    if violated_mandatory:
        lines.append("")
        lines.append("Violated mandatory requirements:")
        for r in violated_mandatory:
            req = catalog.lookup(r.requirement_id)
            refs = ", ".join(req.gdpr_refs)
            lines.append(f"  [{req.id} / {req.code}] {req.text} ({refs})")

    partial = [
        r
        for r in result.results
        if r.status == SATISFIED and r.best is not None and r.best.missing_roles
    ]
    if partial:
        lines.append("")
        lines.append("Partially matched requirements (information to add):")
        for r in partial:
            req = catalog.lookup(r.requirement_id)
            lines.append(f"  [{req.id} / {req.code}] score {r.score:.2f}, evidence {r.best.statement_id}:")
            lines.append(f'      "{r.best.text}"')
            missing = set(r.best.missing_roles)
            if req.frame:
                for arg in req.frame.args:
                    if arg.role in missing:
                        lines.append(f"      Missing: {arg.role} — expected content like '{arg.text}'")

    skipped = [r for r in result.results if r.status == SKIPPED]
    if skipped:
        lines.append("")
        lines.append("Skipped (no dependency parse available):")
        lines.append("  " + ", ".join(r.requirement_id for r in skipped))

    if result.warnings:
        lines.append("")
        lines.append("Warnings — violated optional requirements:")
        for rid in result.warnings:
            req = catalog.lookup(rid)
            lines.append(f"  [{req.id} / {req.code}] {req.text}")

    satisfied = sum(1 for r in result.results if r.status == SATISFIED)
    lines.append("")
    lines.append(
        f"{satisfied} satisfied, "
        f"{sum(1 for r in result.results if r.status == VIOLATED)} violated, "
        f"{len(skipped)} skipped out of {len(result.results)} requirements."
    )
    return "\n".join(lines) + "\n"


# --- full-fidelity result serialization (internal sidecar for serve/eval) --------

def result_to_dict(result: ComplianceResult) -> dict:
    return {
        "document_id": result.document_id,
        "verdict": result.verdict,
        "warnings": list(result.warnings),
        "statement_count": result.statement_count,
        "results": [
            {
                "requirement_id": r.requirement_id,
                "status": r.status,
                "score": r.score,
                "audited": r.audited,
                "best": asdict(r.best) if r.best else None,
                "evidence": [asdict(m) for m in r.evidence],
            }
            for r in result.results
        ],
    }


def _match_from_dict(raw: dict) -> StatementMatch:
    return StatementMatch(
        statement_id=raw["statement_id"],
        text=raw.get("text", ""),
        predicate_matched_by=raw.get("predicate_matched_by", "overlap"),
        matched_roles=tuple(raw.get("matched_roles", ())),
        missing_roles=tuple(raw.get("missing_roles", ())),
        degree=float(raw["degree"]),
    )


def result_from_dict(raw: dict) -> ComplianceResult:
    results = []
    for r in raw["results"]:
        results.append(
            RequirementResult(
                requirement_id=r["requirement_id"],
                status=r["status"],
                score=float(r["score"]),
                best=_match_from_dict(r["best"]) if r.get("best") else None,
                evidence=tuple(_match_from_dict(m) for m in r.get("evidence", ())),
                audited=bool(r.get("audited", False)),
            )
        )
    return ComplianceResult(
        document_id=raw["document_id"],
        results=tuple(results),
        verdict=raw["verdict"],
        warnings=tuple(raw.get("warnings", ())),
        statement_count=int(raw.get("statement_count", 0)),
    )


# --- review queue -----------------------------------------------------------------

@dataclass(frozen=True)
class QueueItem:
    requirement_id: str
    statement_id: str
    text: str
    score: float
    missing_roles: tuple[str, ...]


@dataclass(frozen=True)
class ReviewQueue:
    tau_review: float
    items: tuple[QueueItem, ...]


def build_review_queue(result: ComplianceResult, tau_review: float) -> ReviewQueue:
    """One item per satisfied requirement whose max score is in (0, tau]."""
    items = []
    for r in result.results:
        if r.status != SATISFIED or r.best is None:
            continue
        if 0 < r.score <= tau_review:
            items.append(
                QueueItem(
                    requirement_id=r.requirement_id,
                    statement_id=r.best.statement_id,
                    text=r.best.text,
                    score=r.score,
                    missing_roles=tuple(sorted(r.best.missing_roles)),
                )
            )
    items.sort(key=lambda i: (i.score, int(i.requirement_id[1:])))
    return ReviewQueue(tau_review=tau_review, items=tuple(items))


def queue_dict(queue: ReviewQueue) -> dict:
    return {
        "tau_review": queue.tau_review,
        "items": [asdict(i) for i in queue.items],
    }


# --- analyst decisions --------------------------------------------------------------

@dataclass(frozen=True)
class ReviewDecision:
    requirement_id: str
    statement_id: str
    decision: str  # accept | reject
    reviewer: str
    ts: str


@dataclass(frozen=True)
class ReviewSession:
    document_id: str
    decisions: tuple[ReviewDecision, ...]

    def effective(self) -> dict[tuple[str, str], ReviewDecision]:
        latest: dict[tuple[str, str], ReviewDecision] = {}
        for d in self.decisions:  # append-only log; last decision per pair wins
            latest[(d.requirement_id, d.statement_id)] = d
        return latest


def load_review_log(path) -> list[ReviewDecision]:
    decisions = []
    try:
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                raw = json.loads(line)
                decisions.append(
                    ReviewDecision(
                        requirement_id=raw["req"],
                        statement_id=raw["stmt"],
                        decision=raw["decision"],
                        reviewer=raw.get("reviewer", ""),
                        ts=raw.get("ts", ""),
                    )
                )
    except FileNotFoundError:
        pass
    return decisions


def append_review_log(path, decision: ReviewDecision) -> None:
    record = {
        "req": decision.requirement_id,
        "stmt": decision.statement_id,
        "decision": decision.decision,
        "reviewer": decision.reviewer,
        "ts": decision.ts,
    }
    with open(path, "a", encoding="utf-8") as fh:
        fh.write(json.dumps(record, sort_keys=True) + "\n")


class ReviewError(ValueError):
    pass


def apply_reviews(result: ComplianceResult, session: ReviewSession, catalog: Catalog) -> ComplianceResult:
    """Recompute statuses and the verdict after analyst accept/reject decisions.

    A reject zeroes the named statement's degree for that requirement and the
    score is recomputed as the max over the remaining evidence; an accept pins
    the requirement satisfied and marks it audited. Idempotent for a fixed
    session.
    """
    effective = session.effective()
    by_req: dict[str, dict[str, str]] = {}
    known = {r.requirement_id: {m.statement_id for m in r.evidence} for r in result.results}
    for (req_id, stmt_id), decision in effective.items():
        if req_id not in known:
            raise ReviewError(f"unknown requirement id {req_id!r}")
        if stmt_id not in known[req_id]:
            raise ReviewError(f"unknown statement id {stmt_id!r} for requirement {req_id!r}")
        if decision.decision not in (ACCEPT, REJECT):
            raise ReviewError(f"unknown decision {decision.decision!r}")
        by_req.setdefault(req_id, {})[stmt_id] = decision.decision

    new_results = []
    for r in result.results:
        decisions = by_req.get(r.requirement_id)
        if not decisions:
            new_results.append(r)
            continue
        rejected = {sid for sid, d in decisions.items() if d == REJECT}
        accepted = any(d == ACCEPT for d in decisions.values())
        # evidence entries are kept (so a fixed session re-applies cleanly);
        # rejected statements just stop counting toward the score
        best = None
        score = 0.0
        for m in r.evidence:
            if m.statement_id in rejected:
                continue
            if m.degree > score:
                score = m.degree
                best = m
        status = r.status
        if r.status in (SATISFIED, VIOLATED):
            status = SATISFIED if score > 0 else VIOLATED
        new_results.append(
            replace(r, status=status, score=score, best=best, audited=accepted or bool(rejected))
        )
    verdict, warnings = decide_verdict(new_results, catalog)
    return ComplianceResult(
        document_id=result.document_id,
        results=tuple(new_results),
        verdict=verdict,
        warnings=warnings,
        statement_count=result.statement_count,
    )
