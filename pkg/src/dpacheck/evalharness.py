"""Scoring predictions against gold annotations.

The positive class is a VIOLATION: a true positive is a requirement that is
genuinely violated in a document and predicted violated. This inverts the
usual IR convention (deliberately, so that precision talks about how
trustworthy raised violations are).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .engine import SATISFIED, SKIPPED, VIOLATED, ComplianceResult


class EvalError(ValueError):
    pass


@dataclass(frozen=True)
class GoldAnnotations:
    document_id: str
    labels: dict[str, tuple[str, ...]]  # statement id -> requirement ids it satisfies

    def satisfied_requirements(self) -> frozenset[str]:
        out: set[str] = set()
        for reqs in self.labels.values():
            out.update(reqs)
        return frozenset(out)


def load_gold(path) -> GoldAnnotations:
    raw = json.loads(open(path, encoding="utf-8").read())
    labels = {sid: tuple(reqs) for sid, reqs in raw.get("labels", {}).items()}
    return GoldAnnotations(document_id=raw["document_id"], labels=labels)


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int = 0
    fp: int = 0
    fn: int = 0
    tn: int = 0

    def __add__(self, other: "ConfusionCounts") -> "ConfusionCounts":
        return ConfusionCounts(
            self.tp + other.tp, self.fp + other.fp, self.fn + other.fn, self.tn + other.tn
        )

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.fn + self.tn


@dataclass(frozen=True)
class MetricSet:
    """Percentages in [0, 100]; undefined ratios are None, never 0."""

    accuracy: float | None
    precision: float | None
    recall: float | None
    f_beta: float | None
    beta: float


def metrics(c: ConfusionCounts, beta: float = 0.5) -> MetricSet:
    accuracy = 100.0 * (c.tp + c.tn) / c.total if c.total else None
    precision = 100.0 * c.tp / (c.tp + c.fp) if (c.tp + c.fp) else None
    recall = 100.0 * c.tp / (c.tp + c.fn) if (c.tp + c.fn) else None
    f_beta = None
    if precision is not None and recall is not None:
        denom = beta * beta * precision + recall
        if denom > 0:
            f_beta = (1 + beta * beta) * precision * recall / denom
    return MetricSet(accuracy=accuracy, precision=precision, recall=recall, f_beta=f_beta, beta=beta)


def _pair(predicted: list[ComplianceResult], gold: list[GoldAnnotations]):
    gold_by_id = {g.document_id: g for g in gold}
    if len(gold_by_id) != len(gold):
        raise EvalError("duplicate document ids in gold annotations")
    pairs = []
    for pred in predicted:
        if pred.document_id not in gold_by_id:
            raise EvalError(f"no gold annotations for document {pred.document_id!r}")
        pairs.append((pred, gold_by_id[pred.document_id]))
    missing = set(gold_by_id) - {p.document_id for p in predicted}
    if missing:
        raise EvalError(f"no predictions for documents {sorted(missing)}")
    return pairs


def confusion(
    predicted: list[ComplianceResult], gold: list[GoldAnnotations]
) -> tuple[dict[str, ConfusionCounts], ConfusionCounts]:
    """Per-requirement and total counts over aligned documents (skipped excluded)."""
    per_req: dict[str, ConfusionCounts] = {}
    total = ConfusionCounts()
    for pred, ann in _pair(predicted, gold):
        gold_satisfied = ann.satisfied_requirements()
        for res in pred.results:
            if res.status == SKIPPED:
                continue
            gold_violated = res.requirement_id not in gold_satisfied
            pred_violated = res.status == VIOLATED
            if pred_violated and gold_violated:
                cell = ConfusionCounts(tp=1)
            elif pred_violated and not gold_violated:
                cell = ConfusionCounts(fp=1)
            elif not pred_violated and gold_violated:
                cell = ConfusionCounts(fn=1)
            else:
                cell = ConfusionCounts(tn=1)
            per_req[res.requirement_id] = per_req.get(res.requirement_id, ConfusionCounts()) + cell
            total = total + cell
    return per_req, total


@dataclass(frozen=True)
class TradeoffPoint:
    tau: float
    recall_after_review: float | None
    fraction_statements_reviewed: float


def tradeoff_curve(
    predicted: list[ComplianceResult],
    gold: list[GoldAnnotations],
    taus: list[float],
) -> list[TradeoffPoint]:
    """Simulated oracle review: every satisfied requirement scoring <= tau gets
    its top statement reviewed; wrong predictions flip to violated."""
    pairs = _pair(predicted, gold)
    total_statements = sum(p.statement_count for p, _ in pairs)
    points = []
    for tau in taus:
        counts = ConfusionCounts()
        reviewed = 0
        for pred, ann in pairs:
            gold_satisfied = ann.satisfied_requirements()
            for res in pred.results:
                if res.status == SKIPPED:
                    continue
                gold_violated = res.requirement_id not in gold_satisfied
                pred_violated = res.status == VIOLATED
                if res.status == SATISFIED and 0 < res.score <= tau:
                    reviewed += 1
                    if gold_violated:
                        pred_violated = True  # analyst catches the miss
                if pred_violated and gold_violated:
                    counts = counts + ConfusionCounts(tp=1)
                elif pred_violated and not gold_violated:
                    counts = counts + ConfusionCounts(fp=1)
                elif not pred_violated and gold_violated:
                    counts = counts + ConfusionCounts(fn=1)
                else:
                    counts = counts + ConfusionCounts(tn=1)
        m = metrics(counts)
        fraction = reviewed / total_statements if total_statements else 0.0
        points.append(
            TradeoffPoint(tau=tau, recall_after_review=m.recall, fraction_statements_reviewed=fraction)
        )
    return points


# --- presentation ---------------------------------------------------------------

def _fmt(value: float | None) -> str:
    return "" if value is None else f"{round(value, 1):g}"


def per_requirement_csv(per_req: dict[str, ConfusionCounts], total: ConfusionCounts, beta: float, codes: dict[str, str] | None = None) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["id", "code", "tp", "fp", "fn", "tn", "accuracy", "precision", "recall", f"f{beta:g}"])
    for rid in sorted(per_req, key=lambda r: int(r[1:])):
        c = per_req[rid]
        m = metrics(c, beta)
        code = (codes or {}).get(rid, "")
        writer.writerow([rid, code, c.tp, c.fp, c.fn, c.tn, _fmt(m.accuracy), _fmt(m.precision), _fmt(m.recall), _fmt(m.f_beta)])
    m = metrics(total, beta)
    writer.writerow(["summary", "", total.tp, total.fp, total.fn, total.tn, _fmt(m.accuracy), _fmt(m.precision), _fmt(m.recall), _fmt(m.f_beta)])
    return buf.getvalue()


def summary_dict(total: ConfusionCounts, beta: float) -> dict:
    m = metrics(total, beta)
    return {
        "counts": {"tp": total.tp, "fp": total.fp, "fn": total.fn, "tn": total.tn},
        "beta": beta,
        "accuracy": m.accuracy,
        "precision": m.precision,
        "recall": m.recall,
        "f_beta": m.f_beta,
        "accuracy_pp1": None if m.accuracy is None else round(m.accuracy, 1),
        "precision_pp1": None if m.precision is None else round(m.precision, 1),
        "recall_pp1": None if m.recall is None else round(m.recall, 1),
        "f_beta_pp1": None if m.f_beta is None else round(m.f_beta, 1),
    }


def tradeoff_csv(points: list[TradeoffPoint]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["tau", "recall_after_review", "fraction_statements_reviewed"])
    for p in points:
        writer.writerow([f"{p.tau:g}", _fmt(p.recall_after_review), f"{p.fraction_statements_reviewed:.4f}"])
    return buf.getvalue()
