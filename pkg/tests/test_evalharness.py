import pytest

from dpacheck.engine import SATISFIED, SKIPPED, VIOLATED, ComplianceResult, RequirementResult
from dpacheck.evalharness import (
    ConfusionCounts,
    EvalError,
    GoldAnnotations,
    confusion,
    metrics,
    tradeoff_curve,
)


def result(doc_id, statuses: dict[str, tuple[str, float]], n_statements=10):
    results = tuple(
        RequirementResult(rid, status, score, None, ())
        for rid, (status, score) in sorted(statuses.items(), key=lambda kv: int(kv[0][1:]))
    )
    return ComplianceResult(doc_id, results, "compliant", (), statement_count=n_statements)


def gold(doc_id, satisfied: dict[str, list[str]]):
    return GoldAnnotations(document_id=doc_id, labels={s: tuple(r) for s, r in satisfied.items()})


# --- confusion --------------------------------------------------------------------

def test_predicted_and_gold_violated_is_tp():
    pred = [result("d1", {"R3": (VIOLATED, 0.0)})]
    ann = [gold("d1", {})]
    per_req, total = confusion(pred, ann)
    assert per_req["R3"] == ConfusionCounts(tp=1)
    assert total.tp == 1 and total.total == 1


def test_both_satisfied_is_tn():
    pred = [result("d1", {"R3": (SATISFIED, 0.5)})]
    ann = [gold("d1", {"s1": ["R3"]})]
    _, total = confusion(pred, ann)
    assert total == ConfusionCounts(tn=1)


def test_three_document_hand_tally():
    # hand tally:          d1            d2            d3
    # R1: pred V/gold V -> TP ; pred S/gold V -> FN ; pred V/gold S -> FP
    # R2: pred S/gold S -> TN ; pred V/gold V -> TP ; pred S/gold S -> TN
    pred = [
        result("d1", {"R1": (VIOLATED, 0.0), "R2": (SATISFIED, 1.0)}),
        result("d2", {"R1": (SATISFIED, 0.4), "R2": (VIOLATED, 0.0)}),
        result("d3", {"R1": (VIOLATED, 0.0), "R2": (SATISFIED, 0.9)}),
    ]
    ann = [
        gold("d1", {"s1": ["R2"]}),
        gold("d2", {}),
        gold("d3", {"s1": ["R1", "R2"]}),
    ]
    per_req, total = confusion(pred, ann)
    assert per_req["R1"] == ConfusionCounts(tp=1, fn=1, fp=1)
    assert per_req["R2"] == ConfusionCounts(tn=2, tp=1)
    assert total == ConfusionCounts(tp=2, fp=1, fn=1, tn=2)
    assert per_req["R1"].total == 3 and per_req["R2"].total == 3


def test_skipped_predictions_excluded():
    pred = [result("d1", {"R1": (SKIPPED, 0.0), "R3": (VIOLATED, 0.0)})]
    _, total = confusion(pred, [gold("d1", {})])
    assert total.total == 1


def test_document_mismatch_raises():
    with pytest.raises(EvalError):
        confusion([result("d1", {"R1": (VIOLATED, 0.0)})], [gold("d2", {})])


# --- metrics --------------------------------------------------------------------------

def test_summary_row_metrics():
    m = metrics(ConfusionCounts(tp=618, fp=76, fn=132, tn=524), beta=0.5)
    assert m.accuracy == pytest.approx(84.5926, abs=1e-3)
    assert m.precision == pytest.approx(89.0490, abs=1e-3)
    assert m.recall == pytest.approx(82.4, abs=1e-3)
    assert m.f_beta == pytest.approx(87.6345, abs=1e-3)


def test_r1_row_metrics():
    m = metrics(ConfusionCounts(tp=15, fp=3, fn=0, tn=12), beta=0.5)
    assert round(m.accuracy, 1) == 90.0
    assert round(m.precision, 1) == 83.3
    assert round(m.recall, 1) == 100.0
    assert round(m.f_beta, 1) == 86.2


def test_r14_row_metrics():
    m = metrics(ConfusionCounts(tp=27, fp=3, fn=0, tn=0), beta=0.5)
    assert round(m.accuracy, 1) == 90.0
    assert round(m.precision, 1) == 90.0
    assert round(m.recall, 1) == 100.0
    assert round(m.f_beta, 1) == 91.8


def test_undefined_ratios_absent_not_zero():
    m = metrics(ConfusionCounts(tn=30), beta=0.5)
    assert m.accuracy == 100.0
    assert m.precision is None and m.recall is None and m.f_beta is None


def test_metrics_scale_free():
    base = ConfusionCounts(tp=6, fp=2, fn=3, tn=9)
    scaled = ConfusionCounts(tp=18, fp=6, fn=9, tn=27)
    assert metrics(base) == metrics(scaled)


# --- trade-off curve ---------------------------------------------------------------------

def _tradeoff_fixture():
    # R1 falsely satisfied at 0.3 (gold: violated); R2 truly violated;
    # R3 truly satisfied at 0.9
    pred = [
        result(
            "d1",
            {"R1": (SATISFIED, 0.3), "R2": (VIOLATED, 0.0), "R3": (SATISFIED, 0.9)},
            n_statements=10,
        )
    ]
    ann = [gold("d1", {"s1": ["R3"]})]
    return pred, ann


def test_tau_zero_changes_nothing():
    pred, ann = _tradeoff_fixture()
    point = tradeoff_curve(pred, ann, [0.0])[0]
    base = metrics(confusion(pred, ann)[1])
    assert point.recall_after_review == base.recall
    assert point.fraction_statements_reviewed == 0.0


def test_tau_one_reaches_full_recall():
    pred, ann = _tradeoff_fixture()
    point = tradeoff_curve(pred, ann, [1.0])[0]
    assert point.recall_after_review == pytest.approx(100.0)
    assert point.fraction_statements_reviewed == pytest.approx(2 / 10)


def test_recall_and_fraction_monotone_in_tau():
    pred, ann = _tradeoff_fixture()
    taus = [0.0, 0.2, 0.4, 0.6, 0.8, 1.0]
    points = tradeoff_curve(pred, ann, taus)
    recalls = [p.recall_after_review for p in points]
    fractions = [p.fraction_statements_reviewed for p in points]
    assert recalls == sorted(recalls)
    assert fractions == sorted(fractions)
