"""Command line interface: check, eval, serve.

Exit codes for `check`: 0 compliant, 1 not compliant, 2 indeterminate,
3 usage error, 4 input/resource error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .catalog import CatalogError, default_catalog_path, load_catalog
from .conllu import ingest_conllu, ingest_plain
from .engine import (
    COMPLIANT,
    INDETERMINATE,
    NOT_COMPLIANT,
    MatcherConfig,
    brute_force_check,
    check_document,
)
from .evalharness import (
    ConfusionCounts,
    EvalError,
    confusion,
    load_gold,
    per_requirement_csv,
    summary_dict,
    tradeoff_csv,
    tradeoff_curve,
)
from .lexres import ResourceError, load_resources
from .model import PARSED, IngestError, PartyMap
from .report import (
    build_review_queue,
    queue_dict,
    render_json,
    render_text,
    result_from_dict,
    result_to_dict,
)

EXIT_BY_VERDICT = {COMPLIANT: 0, NOT_COMPLIANT: 1, INDETERMINATE: 2}
EXIT_USAGE = 3
EXIT_ERROR = 4

RESOURCE_ENV = "DPACHECK_RESOURCES"


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse's default exit code 2 collides with "indeterminate"
        self.print_usage(sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dpacheck", description="Check DPA compliance against the requirement catalog.")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="check one DPA and write reports")
    check.add_argument("--dpa", required=True, help="input file (CoNLL-U, or plain text with --plain)")
    check.add_argument("--controller", action="append", default=[], help="controller alias (repeatable)")
    check.add_argument("--processor", action="append", default=[], help="processor alias (repeatable)")
    check.add_argument("--parties", help="JSON sidecar {controller: [...], processor: [...]}")
    check.add_argument("--plain", action="store_true", help="one statement per line, no parses")
    check.add_argument("--merge-lists", action="store_true", help="merge colon lead-ins with list items")
    check.add_argument("--catalog", help="catalog JSON (default: bundled)")
    check.add_argument("--resources", help=f"resource dir (default: bundled; ${RESOURCE_ENV} overrides)")
    check.add_argument("--config", help="JSON file with matcher threshold overrides")
    check.add_argument("--theta-p", type=float, help="predicate similarity threshold")
    check.add_argument("--theta-a", type=float, help="argument similarity threshold")
    check.add_argument("--tau-lesk", type=float, help="normalized word-overlap threshold")
    check.add_argument("--min-shared", type=int, help="absolute shared-lemma floor")
    check.add_argument("--tau-review", type=float, default=0.5, help="review-queue score threshold")
    check.add_argument("--out", default=".", help="output directory")
    check.add_argument("--oracle", action="store_true", help="use the brute-force reference checker")
    check.add_argument("--dump-frames", action="store_true", help="also write frames.jsonl (debug dump)")

    ev = sub.add_parser("eval", help="score predictions against gold annotations")
    ev.add_argument("--pred", help="directory of result.json files")
    ev.add_argument("--gold", help="directory of gold JSON files")
    ev.add_argument("--beta", type=float, default=0.5, help="F-score weight (precision-leaning < 1)")
    ev.add_argument("--tradeoff", action="store_true", help="also write the review trade-off curve")
    ev.add_argument("--counts", help="TP,FP,FN,TN passthrough: print summary metrics only")
    ev.add_argument("--out", default=".", help="output directory")

    serve = sub.add_parser("serve", help="serve the report and review API")
    serve.add_argument("--report", required=True, help="report.json produced by check")
    serve.add_argument("--result", help="result.json sidecar (default: next to the report)")
    serve.add_argument("--reviews", help="review log path (JSONL; default: reviews.jsonl next to report)")
    serve.add_argument("--catalog", help="catalog JSON (default: bundled)")
    serve.add_argument("--ui", help="directory with the static review UI bundle")
    serve.add_argument("--port", type=int, default=8075)
    serve.add_argument("--host", default="127.0.0.1")
    return parser


def _load_parties(args) -> PartyMap:
    controller = list(args.controller)
    processor = list(args.processor)
    if args.parties:
        raw = json.loads(Path(args.parties).read_text(encoding="utf-8"))
        controller += raw.get("controller", [])
        processor += raw.get("processor", [])
    if not controller or not processor:
        print("error: provide at least one --controller and one --processor alias", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return PartyMap.make(controller=controller, processor=processor)


def _load_config(args) -> MatcherConfig:
    values = {}
    if args.config:
        values.update(json.loads(Path(args.config).read_text(encoding="utf-8")))
    overrides = {
        "theta_p": args.theta_p,
        "theta_a": args.theta_a,
        "tau_lesk": args.tau_lesk,
        "min_shared_lemmas": args.min_shared,
    }
    values.update({k: v for k, v in overrides.items() if v is not None})
    return MatcherConfig(**values)


def _resource_dir(args) -> str | None:
    return args.resources or os.environ.get(RESOURCE_ENV) or None


def cmd_check(args) -> int:
    parties = _load_parties(args)
    cfg = _load_config(args)
    res = load_resources(_resource_dir(args))
    catalog = load_catalog(args.catalog or default_catalog_path())

    data = Path(args.dpa).read_bytes()
    doc_id = Path(args.dpa).stem
    if args.plain:
        doc = ingest_plain(data, parties, merge_lists=args.merge_lists, doc_id=doc_id)
    else:
        doc = ingest_conllu(data, parties, merge_lists=args.merge_lists, doc_id=doc_id)

    checker = brute_force_check if args.oracle else check_document
    result = checker(doc, catalog, cfg, res)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.json").write_bytes(render_json(result, catalog))
    (out / "report.txt").write_text(render_text(result, catalog), encoding="utf-8")
    queue = build_review_queue(result, args.tau_review)
    (out / "review-queue.json").write_text(json.dumps(queue_dict(queue), indent=2) + "\n", encoding="utf-8")
    (out / "result.json").write_text(json.dumps(result_to_dict(result), indent=2, sort_keys=True) + "\n", encoding="utf-8")
    if args.dump_frames and doc.mode == PARSED:
        from .conllu import normalize_parties
        from .frames import dump_frames

        (out / "frames.jsonl").write_text(dump_frames(normalize_parties(doc).statements, res.markers), encoding="utf-8")
    print(render_text(result, catalog))
    return EXIT_BY_VERDICT[result.verdict]


def cmd_eval(args) -> int:
    if args.counts:
        try:
            tp, fp, fn, tn = (int(x) for x in args.counts.split(","))
        except ValueError:
            print("error: --counts expects TP,FP,FN,TN", file=sys.stderr)
            return EXIT_USAGE
        summary = summary_dict(ConfusionCounts(tp=tp, fp=fp, fn=fn, tn=tn), args.beta)
        print(json.dumps(summary, indent=2))
        return 0

    if not args.pred or not args.gold:
        print("error: --pred and --gold are required (or use --counts)", file=sys.stderr)
        return EXIT_USAGE
    pred_files = sorted(Path(args.pred).glob("*.json"))
    gold_files = sorted(Path(args.gold).glob("*.json"))
    if not pred_files or not gold_files:
        print("error: empty prediction or gold directory", file=sys.stderr)
        return EXIT_ERROR
    predicted = [result_from_dict(json.loads(p.read_text(encoding="utf-8"))) for p in pred_files]
    gold = [load_gold(p) for p in gold_files]
    per_req, total = confusion(predicted, gold)

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "metrics.csv").write_text(per_requirement_csv(per_req, total, args.beta), encoding="utf-8")
    summary = summary_dict(total, args.beta)
    (out / "metrics.json").write_text(json.dumps(summary, indent=2) + "\n", encoding="utf-8")
    if args.tradeoff:
        taus = [round(0.05 * i, 2) for i in range(0, 21)]
        points = tradeoff_curve(predicted, gold, taus)
        (out / "tradeoff.csv").write_text(tradeoff_csv(points), encoding="utf-8")
    print(json.dumps(summary, indent=2))
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .server import build_app

    report_path = Path(args.report)
    if not report_path.exists():
        print(f"error: report not found: {report_path}", file=sys.stderr)
        return EXIT_ERROR
    result_path = Path(args.result) if args.result else report_path.with_name("result.json")
    reviews_path = Path(args.reviews) if args.reviews else report_path.with_name("reviews.jsonl")
    catalog = load_catalog(args.catalog or default_catalog_path())
    app = build_app(
        report_path=report_path,
        result_path=result_path if result_path.exists() else None,
        reviews_path=reviews_path,
        catalog=catalog,
        ui_dir=Path(args.ui) if args.ui else None,
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "check":
            return cmd_check(args)
        if args.command == "eval":
            return cmd_eval(args)
        if args.command == "serve":
            return cmd_serve(args)
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)
    except (IngestError, CatalogError, ResourceError, EvalError, FileNotFoundError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
