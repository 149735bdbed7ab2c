"""Compliance checking: frame matching, metadata checks, document verdict.

Frame-kind requirements follow the two-stage matcher: predicates first
(verb overlap, then taxonomy similarity above theta_p), then arguments of
statements that passed (lemma overlap on enriched spans, or string
similarity above theta_a). The matching degree of a statement is
(matched arguments + 1) / (requirement arguments + 1), and a requirement's
score is the maximum degree over all statements.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace

from .catalog import Catalog, FrameArg, FrameSpec, RequirementDef
from .conllu import normalize_parties
from .enrich import Enricher
from .frames import StatementFrame, extract_frame
from .lexres import NOUN, VERB, Resources, jaro_winkler, lemma_overlap, text_words
from .model import PARSED, Document, Statement

OVERLAP = "overlap"
SIMILARITY = "similarity"
NONE = "none"

SATISFIED = "satisfied"
VIOLATED = "violated"
SKIPPED = "skipped"

COMPLIANT = "compliant"
NOT_COMPLIANT = "not_compliant"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class MatcherConfig:
    theta_p: float = 0.9
    theta_a: float = 0.7
    tau_lesk: float = 0.5
    min_shared_lemmas: int = 2

    def __post_init__(self):
        for name in ("theta_p", "theta_a", "tau_lesk"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0,1], got {value}")


@dataclass(frozen=True)
class StatementMatch:
    statement_id: str
    text: str
    predicate_matched_by: str  # overlap | similarity | none
    matched_roles: tuple[str, ...]
    missing_roles: tuple[str, ...]
    degree: float


@dataclass(frozen=True)
class RequirementResult:
    requirement_id: str
    status: str  # satisfied | violated | skipped
    score: float
    best: StatementMatch | None
    evidence: tuple[StatementMatch, ...]
    audited: bool = False


@dataclass(frozen=True)
class ComplianceResult:
    document_id: str
    results: tuple[RequirementResult, ...]
    verdict: str
    warnings: tuple[str, ...]
    statement_count: int = 0

    def result_for(self, req_id: str) -> RequirementResult:
        for r in self.results:
            if r.requirement_id == req_id:
                return r
        raise KeyError(req_id)


def decide_verdict(results, catalog: Catalog) -> tuple[str, tuple[str, ...]]:
    mandatory_ids = {r.id for r in catalog.mandatory()}
    violated_mandatory = [r for r in results if r.status == VIOLATED and r.requirement_id in mandatory_ids]
    skipped_mandatory = [r for r in results if r.status == SKIPPED and r.requirement_id in mandatory_ids]
    warnings = tuple(
        sorted(
            (r.requirement_id for r in results if r.status == VIOLATED and r.requirement_id not in mandatory_ids),
            key=lambda rid: int(rid[1:]),
        )
    )
    if violated_mandatory:
        return NOT_COMPLIANT, warnings
    if skipped_mandatory:
        return INDETERMINATE, warnings
    return COMPLIANT, warnings


# --- predicate and argument matching -----------------------------------------

def match_predicates(req: FrameSpec, frame: StatementFrame, cfg: MatcherConfig, res: Resources, enricher: Enricher) -> str:
    enriched = enricher.enrich_predicate(frame.predicate)
    statement_verbs = enriched.union
    if statement_verbs & set(req.predicate_verbs):
        return OVERLAP
    for req_verb in req.predicate_verbs:
        for verb in statement_verbs:
            if res.lex.wup(req_verb, verb, VERB) > cfg.theta_p:
                return SIMILARITY
    return NONE


def _req_arg_bag(res: Resources, text: str) -> frozenset[str]:
    return frozenset(res.normalize_words(text_words(text)))


def match_argument(req_arg: FrameArg, frame: StatementFrame, cfg: MatcherConfig, res: Resources, enricher: Enricher) -> bool:
    arg = frame.args.get(req_arg.role)
    if arg is None:
        return False
    enriched = enricher.enrich_argument(arg)
    statement_words = frozenset(res.normalize_words(enriched.union))
    statement_text = arg.text.lower()
    for alternative in req_arg.alternatives:
        req_bag = _req_arg_bag(res, alternative)
        if lemma_overlap(statement_words, req_bag, res.stopwords) >= 1:
            return True
        if jaro_winkler(statement_text, alternative.lower()) > cfg.theta_a:
            return True
    return False


def statement_degree(req: FrameSpec, frame: StatementFrame, cfg: MatcherConfig, res: Resources, enricher: Enricher | None = None) -> StatementMatch:
    if enricher is None:
        enricher = Enricher(res.lex, res.classes, res.stopwords)
    matched_by = match_predicates(req, frame, cfg, res, enricher)
    if matched_by == NONE:
        return StatementMatch(
            statement_id=frame.statement_id,
            text="",
            predicate_matched_by=NONE,
            matched_roles=(),
            missing_roles=(),
            degree=0.0,
        )
    matched: list[str] = []
    missing: list[str] = []
    found = 0
    for req_arg in req.args:
        if match_argument(req_arg, frame, cfg, res, enricher):
            found += 1
            matched.append(req_arg.role)
        else:
            missing.append(req_arg.role)
    degree = (found + 1) / (len(req.args) + 1)
    return StatementMatch(
        statement_id=frame.statement_id,
        text="",
        predicate_matched_by=matched_by,
        matched_roles=tuple(matched),
        missing_roles=tuple(missing),
        degree=degree,
    )


# --- per-kind requirement checks ----------------------------------------------

def _result_from_matches(req: RequirementDef, matches: list[StatementMatch]) -> RequirementResult:
    evidence = tuple(m for m in matches if m.degree > 0)
    best = None
    score = 0.0
    for m in evidence:  # document order; first occurrence wins ties
        if m.degree > score:
            score = m.degree
            best = m
    status = SATISFIED if score > 0 else VIOLATED
    return RequirementResult(requirement_id=req.id, status=status, score=score, best=best, evidence=evidence)


def check_frame_requirement(
    req: RequirementDef,
    doc: Document,
    cfg: MatcherConfig,
    res: Resources,
    frames: dict[str, StatementFrame | None] | None = None,
    enricher: Enricher | None = None,
) -> RequirementResult:
    assert req.check_kind == "frame" and req.frame is not None
    if doc.mode != PARSED:
        return RequirementResult(req.id, SKIPPED, 0.0, None, ())
    if enricher is None:
        enricher = Enricher(res.lex, res.classes, res.stopwords)
    if frames is None:
        frames = {s.id: extract_frame(s, res.markers) for s in doc.statements}
    matches = []
    for stmt in doc.statements:
        frame = frames.get(stmt.id)
        if frame is None:
            continue
        match = statement_degree(req.frame, frame, cfg, res, enricher)
        if match.degree > 0:
            match = replace(match, text=stmt.text)
        matches.append(match)
    return _result_from_matches(req, matches)


# contact-detail entities, pinned patterns (case-insensitive)
EMAIL_RE = re.compile(r"[A-Za-z0-9._%+-]+@[A-Za-z0-9.-]+\.[A-Za-z]{2,}")
PHONE_RE = re.compile(r"(?<!\w)(?:\+|00)?[\s(]*\d(?:[\s().-]*\d){6,}(?!\d)")
_POSTCODE_RE = re.compile(r"\b\d{4,6}\b\s+[A-Z][A-Za-z]")
_STREET_WORDS = {"street", "st.", "st", "road", "rd.", "rd", "avenue", "ave.", "ave", "rue", "blvd"}


def _is_street_token(token: str) -> bool:
    token = token.lower().strip(",;:()")
    return token in _STREET_WORDS or token.endswith("strasse") or token.endswith("straße")


def _has_postal_address(text: str) -> bool:
    if _POSTCODE_RE.search(text):
        return True
    tokens = text.split()
    for i, tok in enumerate(tokens):
        if tok.strip(",;:()").isdigit():
            if i > 0 and _is_street_token(tokens[i - 1]):
                return True
            if i + 1 < len(tokens) and _is_street_token(tokens[i + 1]):
                return True
    return False


def has_contact_entity(text: str) -> bool:
    return bool(EMAIL_RE.search(text)) or bool(PHONE_RE.search(text)) or _has_postal_address(text)


def check_identity_requirement(req: RequirementDef, doc: Document) -> RequirementResult:
    assert req.check_kind == "identity"
    if doc.mode != PARSED:
        return RequirementResult(req.id, SKIPPED, 0.0, None, ())
    aliases = doc.parties.controller_aliases if req.id == "R1" else doc.parties.processor_aliases
    patterns = [re.compile(r"(?<![\w-])" + re.escape(a) + r"(?![\w-])", re.IGNORECASE) for a in aliases]
    matches = []
    for stmt in doc.statements:
        if any(p.search(stmt.text) for p in patterns) and has_contact_entity(stmt.text):
            matches.append(
                StatementMatch(
                    statement_id=stmt.id,
                    text=stmt.text,
                    predicate_matched_by=OVERLAP,
                    matched_roles=(),
                    missing_roles=(),
                    degree=1.0,
                )
            )
    return _result_from_matches(req, matches)


def _statement_bag(res: Resources, stmt: Statement) -> frozenset[str]:
    if stmt.parsed:
        words: list[str] = []
        for tok in stmt.tokens:
            lemma = tok.lemma.lower()
            words.append(lemma)
            if "-" in lemma:
                words.extend(p for p in lemma.split("-") if p)
    else:
        words = text_words(stmt.text)
    return frozenset(res.normalize_words(words))


def check_lesk_requirement(req: RequirementDef, doc: Document, cfg: MatcherConfig, res: Resources) -> RequirementResult:
    assert req.check_kind == "lesk"
    req_bag = frozenset(res.normalize_words(text_words(req.text))) - res.stopwords
    denom = len(req_bag)
    matches = []
    for stmt in doc.statements:
        shared = lemma_overlap(_statement_bag(res, stmt), req_bag, res.stopwords)
        if denom == 0:
            continue
        normalized = shared / denom
        if shared >= cfg.min_shared_lemmas and normalized >= cfg.tau_lesk:
            matches.append(
                StatementMatch(
                    statement_id=stmt.id,
                    text=stmt.text,
                    predicate_matched_by=OVERLAP,
                    matched_roles=(),
                    missing_roles=(),
                    degree=normalized,
                )
            )
    return _result_from_matches(req, matches)


# --- whole-document checking ----------------------------------------------------

def check_document(doc: Document, catalog: Catalog, cfg: MatcherConfig, res: Resources) -> ComplianceResult:
    """Dispatch every requirement; identity checks see the original party names,
    frame and word-overlap checks run on the party-normalized document."""
    normalized = normalize_parties(doc) if doc.mode == PARSED else doc
    enricher = Enricher(res.lex, res.classes, res.stopwords)
    frames: dict[str, StatementFrame | None] = {}
    if doc.mode == PARSED:
        frames = {s.id: extract_frame(s, res.markers) for s in normalized.statements}

    results = []
    for req in catalog:
        if req.check_kind == "identity":
            results.append(check_identity_requirement(req, doc))
        elif req.check_kind == "lesk":
            results.append(check_lesk_requirement(req, normalized, cfg, res))
        else:
            results.append(check_frame_requirement(req, normalized, cfg, res, frames=frames, enricher=enricher))
    verdict, warnings = decide_verdict(results, catalog)
    return ComplianceResult(
        document_id=doc.id,
        results=tuple(results),
        verdict=verdict,
        warnings=warnings,
        statement_count=len(doc.statements),
    )


# --- independent oracle -----------------------------------------------------------
# Same semantics as check_document, written as plain exhaustive loops: frames
# and enrichment are computed eagerly for every statement, nothing is memoized
# or skipped, and matching is re-derived inline from the lexical primitives.

def brute_force_check(doc: Document, catalog: Catalog, cfg: MatcherConfig, res: Resources) -> ComplianceResult:
    normalized = normalize_parties(doc) if doc.mode == PARSED else doc
    parsed = doc.mode == PARSED

    all_frames: dict[str, StatementFrame | None] = {}
    eager: dict[str, dict] = {}
    if parsed:
        for stmt in normalized.statements:
            frame = extract_frame(stmt, res.markers)
            all_frames[stmt.id] = frame
            if frame is None:
                continue
            pred_words = set(frame.predicate.verbs)
            for verb in frame.predicate.verbs:
                pred_words |= res.lex.synonyms_mfs(verb, VERB)
                pred_words |= res.classes.classmates(verb)
            pred_words -= res.stopwords
            pred_words |= set(frame.predicate.verbs)
            arg_words = {}
            for role, arg in frame.args.items():
                words = set()
                for lemma, tag in zip(arg.words, arg.tags):
                    lemma = lemma.lower()
                    words.add(lemma)
                    if "-" in lemma:
                        words.update(p for p in lemma.split("-") if p)
                    if lemma in res.stopwords:
                        continue
                    if tag in ("NOUN", "PROPN"):
                        words |= res.lex.synonyms_mfs(lemma, NOUN)
                    elif tag in ("VERB", "AUX"):
                        words |= res.lex.synonyms_mfs(lemma, VERB)
                arg_words[role] = frozenset(res.lex.normalize(w) for w in words)
            eager[stmt.id] = {"pred_words": pred_words, "arg_words": arg_words, "frame": frame}

    results = []
    for req in catalog:
        if req.check_kind == "identity":
            results.append(check_identity_requirement(req, doc))
            continue
        if req.check_kind == "lesk":
            req_bag = frozenset(res.lex.normalize(w) for w in text_words(req.text)) - res.stopwords
            matches = []
            for stmt in normalized.statements:
                shared = lemma_overlap(_statement_bag(res, stmt), req_bag, res.stopwords)
                if req_bag and shared >= cfg.min_shared_lemmas and shared / len(req_bag) >= cfg.tau_lesk:
                    matches.append(
                        StatementMatch(stmt.id, stmt.text, OVERLAP, (), (), shared / len(req_bag))
                    )
            results.append(_result_from_matches(req, matches))
            continue

        if not parsed:
            results.append(RequirementResult(req.id, SKIPPED, 0.0, None, ()))
            continue
        spec = req.frame
        matches = []
        for stmt in normalized.statements:
            info = eager.get(stmt.id)
            if info is None:
                continue
            frame = info["frame"]
            matched_by = NONE
            if info["pred_words"] & set(spec.predicate_verbs):
                matched_by = OVERLAP
            else:
                for rv in spec.predicate_verbs:
                    for sv in info["pred_words"]:
                        if res.lex.wup(rv, sv, VERB) > cfg.theta_p:
                            matched_by = SIMILARITY
                            break
                    if matched_by != NONE:
                        break
            if matched_by == NONE:
                matches.append(StatementMatch(stmt.id, "", NONE, (), (), 0.0))
                continue
            found = 0
            matched_roles = []
            missing_roles = []
            for req_arg in spec.args:
                ok = False
                statement_words = info["arg_words"].get(req_arg.role)
                arg = frame.args.get(req_arg.role)
                if statement_words is not None and arg is not None:
                    for alternative in req_arg.alternatives:
                        alt_bag = frozenset(res.lex.normalize(w) for w in text_words(alternative))
                        if (statement_words & alt_bag) - res.stopwords:
                            ok = True
                            break
                        if jaro_winkler(arg.text.lower(), alternative.lower()) > cfg.theta_a:
                            ok = True
                            break
                if ok:
                    found += 1
                    matched_roles.append(req_arg.role)
                else:
                    missing_roles.append(req_arg.role)
            degree = (found + 1) / (len(spec.args) + 1)
            matches.append(
                StatementMatch(stmt.id, stmt.text, matched_by, tuple(matched_roles), tuple(missing_roles), degree)
            )
        results.append(_result_from_matches(req, matches))

    verdict, warnings = decide_verdict(results, catalog)
    return ComplianceResult(
        document_id=doc.id,
        results=tuple(results),
        verdict=verdict,
        warnings=warnings,
        statement_count=len(doc.statements),
    )

