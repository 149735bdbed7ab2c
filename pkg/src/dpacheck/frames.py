"""One semantic frame per statement: a predicate plus role-labeled spans.

Exactly one predicate is extracted (the clause around the dependency root);
statements without a root verb get no frame. Role rules operate on the
derived chunks and the marker lexicon; a span may carry several roles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chunker import MODAL_LEMMAS, clause_projection
from .lexres import MarkerLexicon
from .model import Chunk, Statement, Token

SUBJECT_RELS = {"nsubj", "nsubj:pass"}
OBJECT_RELS = {"obj", "iobj"}
CLAUSAL_COMPLEMENTS = {"xcomp", "advcl", "acl", "acl:relcl", "ccomp"}
PURPOSIVE_MARKS = {"to", "for"}
SUBORDINATING_MARKS = {
    "if", "when", "where", "once", "unless", "because", "although",
    "while", "that", "whether", "after", "before", "since",
}


@dataclass(frozen=True)
class Predicate:
    span: tuple[int, int]
    verbs: tuple[str, ...]
    text: str


@dataclass(frozen=True)
class ArgumentSpan:
    role: str
    spans: tuple[tuple[int, int], ...]
    text: str
    words: tuple[str, ...]
    tags: tuple[str, ...]  # upos aligned with words


@dataclass(frozen=True)
class StatementFrame:
    statement_id: str
    predicate: Predicate
    args: dict[str, ArgumentSpan]

    def has_role(self, role: str) -> bool:
        return role in self.args


def marker_hit(phrase_lemmas: list[str] | tuple[str, ...], role: str, markers: MarkerLexicon) -> bool:
    """True when any marker of the role occurs in the lemma sequence."""
    lemmas = [l.lower() for l in phrase_lemmas]
    bag = set(lemmas)
    if bag & markers.single_words(role):
        return True
    for phrase in markers.multi_words(role):
        n = len(phrase)
        for i in range(len(lemmas) - n + 1):
            if tuple(lemmas[i : i + n]) == phrase:
                return True
    return False


def demarcate(token_index: int, chunks: tuple[Chunk, ...], labels: tuple[str, ...]) -> tuple[int, int]:
    """Smallest chunk with an allowed label containing the token, else the token itself."""
    best: Chunk | None = None
    for chunk in chunks:
        if chunk.label in labels and chunk.contains(token_index):
            if best is None or len(chunk) < len(best):
                best = chunk
    if best is None:
        return (token_index, token_index)
    return (best.start, best.end)


def _children(tokens: tuple[Token, ...]) -> dict[int, list[Token]]:
    kids: dict[int, list[Token]] = {}
    for tok in tokens:
        kids.setdefault(tok.head, []).append(tok)
    return kids


def _base(deprel: str) -> str:
    return deprel.split(":", 1)[0]


def _predicate(stmt: Statement, root: Token, kids) -> Predicate | None:
    root_kids = kids.get(root.index, ())
    has_cop = any(_base(c.deprel) == "cop" for c in root_kids)
    if root.upos not in ("VERB", "AUX") and not has_cop:
        return None
    span = demarcate(root.index, stmt.chunks, ("VP",))
    span_tokens = stmt.tokens[span[0] - 1 : span[1]]
    verbs = [t.lemma.lower() for t in span_tokens if t.upos == "VERB"]
    if not verbs:
        verbs = [t.lemma.lower() for t in span_tokens if t.upos == "AUX" and t.lemma.lower() not in MODAL_LEMMAS]
        if root.upos not in ("VERB", "AUX"):
            verbs.append(root.lemma.lower())
        if not verbs and root.upos == "AUX" and root.lemma.lower() not in MODAL_LEMMAS:
            verbs = [root.lemma.lower()]
    if not verbs:
        return None
    seen = dict.fromkeys(verbs)
    return Predicate(span=span, verbs=tuple(seen), text=stmt.span_text(*span))


def _group(stmt: Statement, role: str, spans: list[tuple[int, int]]) -> ArgumentSpan | None:
    uniq = sorted(set(spans))
    if not uniq:
        return None
    # when spans nest, the inner one is the more specific demarcation
    uniq = [
        s
        for s in uniq
        if not any(o != s and o[0] >= s[0] and o[1] <= s[1] for o in uniq)
    ]
    text = " ".join(stmt.span_text(*s) for s in uniq)
    words: list[str] = []
    tags: list[str] = []
    for s in uniq:
        for tok in stmt.tokens[s[0] - 1 : s[1]]:
            words.append(tok.lemma.lower())
            tags.append(tok.upos)
    return ArgumentSpan(role=role, spans=tuple(uniq), text=text, words=tuple(words), tags=tuple(tags))


def _clause_marks(kids, token: Token) -> list[str]:
    return [c.lemma.lower() for c in kids.get(token.index, ()) if _base(c.deprel) in ("mark", "case")]


def _clause_span(stmt: Statement, kids, token: Token) -> tuple[int, int]:
    """Clause subtree span, starting at the subordinating mark when present."""
    lo, hi = clause_projection(stmt.tokens, token.index)
    marks = [c.index for c in kids.get(token.index, ()) if _base(c.deprel) in ("mark", "case")]
    if marks:
        first = min(marks)
        if lo <= first <= hi:
            lo = first
    return lo, hi


def extract_frame(stmt: Statement, markers: MarkerLexicon) -> StatementFrame | None:
    """Apply the role extraction rules; None when the statement has no root verb."""
    if not stmt.parsed:
        return None
    root = stmt.root()
    if root is None:
        return None
    kids = _children(stmt.tokens)
    predicate = _predicate(stmt, root, kids)
    if predicate is None:
        return None

    spans: dict[str, list[tuple[int, int]]] = {}

    def add(role: str, span: tuple[int, int]):
        spans.setdefault(role, []).append(span)

    # actor: NP around the root's subject
    for child in kids.get(root.index, ()):
        if child.deprel in SUBJECT_RELS:
            add("actor", demarcate(child.index, stmt.chunks, ("NP",)))

    # object/beneficiary routing is conditioned on the predicate's marker
    pred_lemmas = stmt.span_lemmas(*predicate.span)
    has_ben_marker = marker_hit(pred_lemmas, "beneficiary", markers)

    object_nps = [
        demarcate(c.index, stmt.chunks, ("NP",))
        for c in kids.get(root.index, ())
        if c.deprel in OBJECT_RELS
    ]
    dative_nps = [
        demarcate(c.index, stmt.chunks, ("NP",))
        for c in kids.get(root.index, ())
        if _base(c.deprel) == "obl" and set(_clause_marks(kids, c)) & {"to", "on", "upon"}
    ]
    # clausal complements of the root that open with a plain preposition
    prep_vps: list[tuple[int, int]] = []
    purposive: list[Token] = []
    for tok in stmt.tokens:
        if tok is root or tok.upos != "VERB":
            continue
        base = _base(tok.deprel)
        if base not in ("xcomp", "advcl", "acl", "ccomp"):
            continue
        marks = _clause_marks(kids, tok)
        if marks and set(marks) & PURPOSIVE_MARKS:
            purposive.append(tok)
            continue
        if base == "xcomp" and tok.head == root.index and not marks:
            purposive.append(tok)  # open clausal complement of the root
            continue
        if tok.head == root.index and marks and not (set(marks) & SUBORDINATING_MARKS):
            prep_vps.append(_clause_span(stmt, kids, tok))

    if has_ben_marker:
        # a beneficiary-evoking predicate gives its preposition-linked NP the
        # beneficiary role; the direct object joins it only when a prepositional
        # verb complement is available to carry the object role instead
        # ("assist X in doing Y" vs "return Z to X")
        for span in dative_nps:
            add("beneficiary", span)
        if prep_vps:
            for span in object_nps:
                add("beneficiary", span)
            for span in prep_vps:
                add("object", span)
        else:
            for span in object_nps:
                add("object", span)
    else:
        for span in object_nps + prep_vps:
            add("object", span)

    # beneficiary, second branch: subject of a non-root verb
    for tok in stmt.tokens:
        if tok.upos == "VERB" and tok is not root:
            for child in kids.get(tok.index, ()):
                if child.deprel in SUBJECT_RELS:
                    add("beneficiary", demarcate(child.index, stmt.chunks, ("NP",)))

    # marker-driven roles over the chunk inventory
    role_labels = {
        "condition": ("PP", "ADVP", "SBAR"),
        "constraint": ("PP", "ADVP", "SBAR"),
        "time": ("NP", "PP", "ADVP", "SBAR"),
        "situation": ("NP", "VP"),
        "reference": ("NP",),
    }
    for role, labels in role_labels.items():
        for chunk in stmt.chunks:
            if chunk.label in labels and marker_hit(stmt.span_lemmas(chunk.start, chunk.end), role, markers):
                add(role, (chunk.start, chunk.end))

    # reason: purposive clauses and open clausal complements of the root
    for tok in purposive:
        add("reason", _clause_span(stmt, kids, tok))

    args: dict[str, ArgumentSpan] = {}
    for role, role_spans in spans.items():
        grouped = _group(stmt, role, role_spans)
        if grouped:
            args[role] = grouped
    return StatementFrame(statement_id=stmt.id, predicate=predicate, args=args)


def frame_debug_dict(frame: StatementFrame) -> dict:
    """JSON-friendly dump of one frame, for golden-file tests and UI overlays."""
    return {
        "id": frame.statement_id,
        "predicate": {
            "text": frame.predicate.text,
            "span": list(frame.predicate.span),
            "verbs": list(frame.predicate.verbs),
        },
        "args": {
            role: {"text": arg.text, "spans": [list(s) for s in arg.spans]}
            for role, arg in sorted(frame.args.items())
        },
    }


def dump_frames(statements, markers: MarkerLexicon) -> str:
    """One JSON object per statement with a frame, JSONL."""
    import json

    lines = []
    for stmt in statements:
        frame = extract_frame(stmt, markers)
        if frame is not None:
            lines.append(json.dumps(frame_debug_dict(frame), sort_keys=True))
    return "\n".join(lines) + ("\n" if lines else "")
