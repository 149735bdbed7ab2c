"""Programmatic construction of parsed DPA statements.

Builds small dependency trees from phrase templates, for test fixtures and
seeded synthetic corpora (there is no parser in this package, so synthetic
documents are assembled directly in the token model; they can also be
serialized to CoNLL-U).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .chunker import derive_chunks
from .model import PARSED, Document, PartyMap, Statement, Token

DETS = {"the", "a", "an", "any", "all", "this", "its", "their", "such", "no", "each", "every"}
ADPS = {"of", "in", "on", "to", "for", "with", "without", "by", "under", "from", "after",
        "before", "between", "at", "upon", "during", "within"}
LEMMA_OVERRIDES = {
    "written": "write", "documented": "document", "intended": "intend",
    "engaged": "engage", "approved": "approve", "stored": "store",
    "processed": "process", "transmitted": "transmit", "is": "be", "are": "be",
    "has": "have", "does": "do", "data": "data", "measures": "measure",
    "services": "service", "instructions": "instruction", "obligations": "obligation",
    "authorities": "authority", "breaches": "breach", "types": "type",
    "categories": "category", "subjects": "subject", "changes": "change",
    "audits": "audit", "inspections": "inspection", "requests": "request",
    "rights": "right", "persons": "person", "records": "record",
    "sub-processors": "sub-processor", "sub-contractors": "sub-contractor",
    "parties": "party", "risks": "risk", "guarantees": "guarantee",
    "freedoms": "freedom", "provisions": "provision", "operations": "operation",
    "details": "detail", "effects": "effect", "consequences": "consequence",
    "hours": "hour", "days": "day", "copies": "copy", "facilities": "facility",
    "procedures": "procedure", "views": "view", "representatives": "representative",
}
ADJ_WORDS = {
    "personal", "prior", "written", "undue", "appropriate", "technical",
    "organizational", "general", "specific", "documented", "statutory",
    "intended", "effective", "lawful", "unlawful", "accidental", "supervisory",
    "high", "natural", "legal", "marital", "first", "last", "following", "same",
    "engaged", "approved", "adequate", "necessary", "systematic",
}


def _lemma(word: str) -> str:
    low = word.lower()
    if low in LEMMA_OVERRIDES:
        return LEMMA_OVERRIDES[low]
    return low


def _upos(word: str, position_hint: str) -> str:
    low = word.lower()
    if low in DETS:
        return "DET"
    if low in ADPS:
        return "ADP"
    if low in ADJ_WORDS:
        return "ADJ"
    if low == "and" or low == "or":
        return "CCONJ"
    if low.replace("(", "").replace(")", "").replace(".", "").isdigit():
        return "NUM"
    if position_hint == "propn" and word[:1].isupper():
        return "PROPN"
    return "NOUN"


@dataclass
class Draft:
    surface: str
    lemma: str
    upos: str
    head: int  # builder index, 0 = root
    deprel: str


class StatementBuilder:
    """Assemble one dependency tree; indices are resolved on build()."""

    def __init__(self):
        self.drafts: list[Draft] = []

    def add(self, surface, lemma, upos, head, deprel) -> int:
        self.drafts.append(Draft(surface, lemma, upos, head, deprel))
        return len(self.drafts)

    def add_np(self, words: tuple[str, ...], head: int, deprel: str, propn: bool = False) -> int:
        """Flat NP: determiners/adjectives/compounds in front of the final head noun."""
        hint = "propn" if propn else "noun"
        start = len(self.drafts) + 1
        n = len(words)
        head_index = start + n - 1
        for i, word in enumerate(words):
            if i == n - 1:
                self.add(word, _lemma(word), _upos(word, hint), head, deprel)
                continue
            upos = _upos(word, hint)
            rel = "det" if upos == "DET" else "amod" if upos == "ADJ" else "nummod" if upos == "NUM" else "compound"
            self.add(word, _lemma(word), upos, head_index, rel)
        return head_index

    def add_pp(self, prep: str, words: tuple[str, ...], head: int, nmod_tail: tuple[str, tuple[str, ...]] | None = None) -> int:
        """Prepositional phrase attached as obl; optional '<prep> <np>' tail as nmod."""
        case_pos = len(self.drafts) + 1
        self.add(prep, _lemma(prep), "ADP", 0, "case")  # head patched below
        noun = self.add_np(words, head, "obl")
        self.drafts[case_pos - 1].head = noun
        if nmod_tail:
            tail_prep, tail_words = nmod_tail
            tcase = len(self.drafts) + 1
            self.add(tail_prep, _lemma(tail_prep), "ADP", 0, "case")
            tnoun = self.add_np(tail_words, noun, "nmod")
            self.drafts[tcase - 1].head = tnoun
        return noun

    def build(self, sid: str, source: str = "synth") -> Statement:
        tokens = tuple(
            Token(index=i + 1, surface=d.surface, lemma=d.lemma, upos=d.upos, head=d.head, deprel=d.deprel)
            for i, d in enumerate(self.drafts)
        )
        text = " ".join(t.surface for t in tokens)
        stmt = Statement(id=sid, text=text, tokens=tokens, chunks=derive_chunks(tokens), source=source)
        return stmt


def obligation_statement(
    sid: str,
    subject: tuple[str, ...],
    verb: str,
    obj: tuple[str, ...] | None = None,
    aux: str | None = "shall",
    negated: bool = False,
    dative: tuple[str, tuple[str, ...]] | None = None,
    pps: list[tuple[str, tuple[str, ...], tuple | None]] | None = None,
    clause: tuple[str, str, tuple[str, ...]] | None = None,
    subject_propn: bool = False,
) -> Statement:
    """'<subject> shall [not] <verb> <obj> [to <np>] [<pp>...] [<mark> <verb> <np>].'"""
    b = StatementBuilder()
    # compute the root position after the subject block and aux/neg
    subj_len = len(subject)
    root_pos = subj_len + 1 + (1 if aux else 0) + (1 if negated else 0)
    b.add_np(subject, root_pos, "nsubj", propn=subject_propn)
    if aux:
        b.add(aux, _lemma(aux), "AUX", root_pos, "aux")
    if negated:
        b.add("not", "not", "PART", root_pos, "advmod")
    root = b.add(verb, _lemma(verb), "VERB", 0, "root")
    assert root == root_pos
    if obj:
        b.add_np(obj, root, "obj")
    if dative:
        prep, words = dative
        b.add_pp(prep, words, root)
    for prep, words, tail in pps or []:
        b.add_pp(prep, words, root, nmod_tail=tail)
    if clause:
        mark, cverb, cobj = clause
        mark_pos = len(b.drafts) + 1
        cverb_pos = mark_pos + 1
        b.add(mark, _lemma(mark), "SCONJ" if mark in ("if", "when", "where", "once") else "ADP", cverb_pos, "mark")
        b.add(cverb, _lemma(cverb), "VERB", root, "advcl")
        if cobj:
            b.add_np(cobj, cverb_pos, "obj")
    b.add(".", ".", "PUNCT", root, "punct")
    return b.build(sid)


def fragment_statement(sid: str, words: tuple[str, ...]) -> Statement:
    """A verbless heading; yields no frame."""
    b = StatementBuilder()
    b.add_np(words, 0, "root", propn=True)
    return b.build(sid)


def plain_statement(sid: str, text: str) -> Statement:
    return Statement(id=sid, text=text, source="synth")


# --- seeded corpora -----------------------------------------------------------

_SUBJECTS = [
    (("Levico",), True),
    (("the", "processor"), False),
    (("the", "controller"), False),
    (("the", "parties"), False),
    (("Acme", "GmbH"), True),
]
_VERBS = [
    "process", "engage", "inform", "notify", "assist", "implement", "ensure",
    "take", "return", "delete", "transfer", "document", "seek", "demonstrate",
    "impose", "maintain", "describe", "cover", "govern", "contain", "keep",
    "store", "perform", "conduct", "carry", "remain",
]
_OBJECTS = [
    ("personal", "data"),
    ("a", "sub-processor"),
    ("all", "measures"),
    ("audits",),
    ("a", "review"),
    ("guarantees",),
    ("records",),
    ("the", "services"),
    ("the", "agreement"),
    ("appropriate", "technical", "measures"),
]
_METADATA = [
    (("the", "agreement"), "contain", ("the", "duration"), ("of", ("the", "processing"), None)),
    (("the", "agreement"), "contain", ("the", "types"), ("of", ("personal", "data"), None)),
    (("the", "agreement"), "contain", ("the", "categories"), ("of", ("data", "subjects"), None)),
    (("the", "agreement"), "contain", ("the", "nature"), ("of", ("the", "processing"), None)),
]
_PPS: list[tuple[str, tuple[str, ...], tuple | None]] = [
    ("without", ("prior", "written", "authorization"), ("of", ("the", "controller"))),
    ("on", ("documented", "instructions"), ("from", ("the", "controller"))),
    ("without", ("undue", "delay"), None),
    ("in", ("accordance",), ("with", ("Article", "32"))),
    ("for", ("the", "duration"), ("of", ("the", "agreement"))),
    ("in", ("case",), ("of", ("a", "personal", "data", "breach"))),
    ("under", ("its", "authority"), None),
    ("after", ("the", "end"), ("of", ("the", "services"))),
]
_CLAUSES = [
    ("if", "terminates", ("the", "agreement")),
    ("when", "processes", ("personal", "data")),
    ("where", "infringes", ("the", "GDPR")),
]
_FRAGMENTS = [
    ("Annex", "1", "Security"),
    ("Data", "Processing", "Agreement"),
    ("Appendix", "B", "Measures"),
]


def random_statement(rng: random.Random, sid: str) -> Statement:
    kind = rng.random()
    if kind < 0.08:
        return fragment_statement(sid, rng.choice(_FRAGMENTS))
    if kind < 0.2:
        subject, verb, obj, pp = rng.choice(_METADATA)
        return obligation_statement(sid, subject=subject, verb=verb, obj=obj, pps=[pp])
    subject, propn = rng.choice(_SUBJECTS)
    verb = rng.choice(_VERBS)
    obj = rng.choice(_OBJECTS) if rng.random() < 0.9 else None
    pps = rng.sample(_PPS, k=rng.randint(0, 2))
    clause = rng.choice(_CLAUSES) if rng.random() < 0.25 else None
    dative = ("to", ("the", "controller")) if rng.random() < 0.2 else None
    return obligation_statement(
        sid,
        subject=subject,
        verb=verb,
        obj=obj,
        aux="shall" if rng.random() < 0.8 else None,
        negated=rng.random() < 0.15,
        dative=dative,
        pps=pps,
        clause=clause,
        subject_propn=propn,
    )


DEFAULT_PARTIES = PartyMap.make(controller=["Sefer University", "Company"], processor=["Levico Accounting GmbH", "Levico"])


def random_document(seed: int, n_statements: int | None = None, doc_id: str | None = None) -> Document:
    rng = random.Random(seed)
    n = n_statements if n_statements is not None else rng.randint(5, 14)
    statements = [random_statement(rng, f"s{i + 1}") for i in range(n)]
    return Document(
        id=doc_id or f"synth-{seed}",
        statements=tuple(statements),
        parties=DEFAULT_PARTIES,
        mode=PARSED,
    )


def to_conllu(doc: Document) -> str:
    """Serialize parsed statements to CoNLL-U (the ingestion counterpart)."""
    out = []
    for stmt in doc.statements:
        out.append(f"# sent_id = {stmt.id}")
        out.append(f"# text = {stmt.text}")
        for t in stmt.tokens:
            out.append(
                "\t".join(
                    [str(t.index), t.surface, t.lemma, t.upos, "_", "_", str(t.head), t.deprel, "_", "_"]
                )
            )
        out.append("")
    return "\n".join(out) + "\n"
