"""Loading DPAs from CoNLL-U or plain text, list merging, party normalization."""

from __future__ import annotations

import re
from dataclasses import replace

from .chunker import derive_chunks
from .model import PARSED, PLAIN, Document, IngestError, PartyMap, Statement, Token

_MODAL = {"shall", "will", "would", "should", "can", "could", "may", "might", "must"}

_BULLET_RE = re.compile(r"^\s*(?:[-•–—*▪o]|\(?[a-z0-9]{1,4}[).])\s+", re.IGNORECASE)


def _parse_sentence(lines: list[tuple[int, str]], sent_id: str, text_meta: str | None) -> Statement:
    tokens: list[Token] = []
    for lineno, line in lines:
        cols = line.split("\t")
        if len(cols) != 10:
            raise IngestError(f"expected 10 tab-separated columns, got {len(cols)}", lineno)
        tok_id = cols[0]
        if "-" in tok_id or "." in tok_id:
            # multiword-token ranges and empty nodes are not syntactic words
            continue
        try:
            index = int(tok_id)
        except ValueError:
            raise IngestError(f"malformed token id {tok_id!r}", lineno) from None
        try:
            head = int(cols[6])
        except ValueError:
            raise IngestError(f"malformed head index {cols[6]!r}", lineno) from None
        surface = cols[1]
        lemma = cols[2] if cols[2] not in ("", "_") else surface.lower()
        tokens.append(Token(index=index, surface=surface, lemma=lemma, upos=cols[3], head=head, deprel=cols[7]))

    first_line = lines[0][0]
    n = len(tokens)
    roots = [t for t in tokens if t.head == 0]
    if len(roots) > 1:
        raise IngestError(f"sentence {sent_id}: multiple roots", first_line)
    if not roots:
        raise IngestError(f"sentence {sent_id}: no root token", first_line)
    for t in tokens:
        if not (0 <= t.head <= n):
            raise IngestError(f"sentence {sent_id}: head index {t.head} out of range", first_line)

    text = text_meta if text_meta else " ".join(t.surface for t in tokens)
    stmt = Statement(id=sent_id, text=text, tokens=tuple(tokens), source=f"line {first_line}")
    return replace(stmt, chunks=derive_chunks(stmt.tokens))


def ingest_conllu(
    data: bytes | str,
    parties: PartyMap,
    merge_lists: bool = False,
    doc_id: str = "dpa",
) -> Document:
    """Build a parsed Document from CoNLL-U content (one Statement per sentence)."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    statements: list[Statement] = []
    pending: list[tuple[int, str]] = []
    sent_id: str | None = None
    text_meta: str | None = None
    counter = 0

    def flush():
        nonlocal pending, sent_id, text_meta, counter
        if pending:
            counter += 1
            sid = sent_id or f"s{counter}"
            statements.append(_parse_sentence(pending, sid, text_meta))
        pending, sent_id, text_meta = [], None, None

    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            flush()
            continue
        if line.startswith("#"):
            meta = line[1:].strip()
            if meta.startswith("sent_id"):
                sent_id = meta.partition("=")[2].strip() or None
            elif meta.startswith("text"):
                text_meta = meta.partition("=")[2].strip() or None
            continue
        pending.append((lineno, line))
    flush()

    doc = Document(id=doc_id, statements=tuple(statements), parties=parties, mode=PARSED)
    if merge_lists:
        doc = merge_list_items(doc)
    return doc


def ingest_plain(
    data: bytes | str,
    parties: PartyMap,
    merge_lists: bool = False,
    doc_id: str = "dpa",
) -> Document:
    """Build a plain-mode Document from one-statement-per-line text."""
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    statements = []
    for i, line in enumerate(data.splitlines(), start=1):
        text = line.strip()
        if text:
            statements.append(Statement(id=f"s{len(statements) + 1}", text=text, source=f"line {i}"))
    doc = Document(id=doc_id, statements=tuple(statements), parties=parties, mode=PLAIN)
    if merge_lists:
        doc = merge_list_items(doc)
    return doc


# --- list-item merging -----------------------------------------------------

def _looks_like_item(text: str) -> bool:
    return bool(_BULLET_RE.match(text)) or text.rstrip().endswith(";")


def _merge_tokens(lead: Statement, item: Statement) -> tuple[Token, ...]:
    lead_root = lead.root()
    item_root = item.root()
    offset = len(lead.tokens)
    merged: list[Token] = list(lead.tokens)
    for tok in item.tokens:
        head = tok.head + offset if tok.head else 0
        merged.append(replace(tok, index=tok.index + offset, head=head))
    item_root_new = item_root.index + offset

    if lead_root is not None and lead_root.upos == "AUX":
        # canonical "<party> shall:" lead-in: the item verb becomes the root
        # and the lead-in auxiliary and its dependents re-attach under it
        out: list[Token] = []
        for tok in merged:
            if tok.index == lead_root.index:
                out.append(replace(tok, head=item_root_new, deprel="aux"))
            elif tok.index <= offset and tok.head == lead_root.index:
                out.append(replace(tok, head=item_root_new))
            elif tok.index == item_root_new:
                out.append(replace(tok, head=0, deprel="root"))
            else:
                out.append(tok)
        return tuple(out)

    # otherwise hang the item clause off the lead-in root
    out = []
    for tok in merged:
        if tok.index == item_root_new:
            out.append(replace(tok, head=lead_root.index if lead_root else 0, deprel="parataxis"))
        else:
            out.append(tok)
    return tuple(out)


def merge_list_items(doc: Document) -> Document:
    """Concatenate each colon-terminated lead-in with its following list items.

    Originals are kept; each synthesized statement records its sources in
    merged_from. No-op on documents without list structure.
    """
    out: list[Statement] = []
    synthesized: list[Statement] = []
    stmts = doc.statements
    i = 0
    while i < len(stmts):
        stmt = stmts[i]
        out.append(stmt)
        if stmt.text.rstrip().endswith(":"):
            j = i + 1
            inside_run = False
            while j < len(stmts):
                item = stmts[j]
                # a run starts at a bullet or ";"-terminated statement and
                # continues until the first item that does not end in ";"
                if not (_looks_like_item(item.text) or inside_run):
                    break
                item_text = _BULLET_RE.sub("", item.text).strip()
                text = f"{stmt.text.rstrip()} {item_text}"
                sid = f"{stmt.id}+{item.id}"
                if doc.mode == PARSED and stmt.parsed and item.parsed:
                    tokens = _merge_tokens(stmt, item)
                    merged = Statement(
                        id=sid,
                        text=text,
                        tokens=tokens,
                        chunks=derive_chunks(tokens),
                        source=stmt.source,
                        merged_from=(stmt.id, item.id),
                    )
                else:
                    merged = Statement(id=sid, text=text, source=stmt.source, merged_from=(stmt.id, item.id))
                synthesized.append(merged)
                inside_run = item.text.rstrip().endswith((";", ",", ":"))
                if not inside_run:
                    break
                j += 1
        i += 1
    return doc.with_statements(tuple(out + synthesized))


# --- party normalization ---------------------------------------------------

def _alias_patterns(parties: PartyMap) -> list[tuple[re.Pattern, str, str]]:
    pairs = [(a, "controller") for a in parties.controller_aliases]
    pairs += [(a, "processor") for a in parties.processor_aliases]
    pairs.sort(key=lambda p: -len(p[0]))
    out = []
    for alias, role in pairs:
        # an existing leading "the" is absorbed so the placeholder is not doubled
        pat = re.compile(
            r"(?:\bthe\s+)?(?<![\w-])" + re.escape(alias) + r"(?![\w-])",
            re.IGNORECASE,
        )
        out.append((pat, alias, role))
    return out


def _replace_text(text: str, patterns) -> str:
    for pat, alias, role in patterns:
        text = pat.sub(f"the {role}", text)
    return text


def _alias_token_spans(tokens: tuple[Token, ...], alias: str) -> list[tuple[int, int]]:
    words = alias.lower().split()
    n = len(words)
    spans = []
    i = 0
    while i + n <= len(tokens):
        window = [t.surface.lower() for t in tokens[i : i + n]]
        if window == words:
            spans.append((i + 1, i + n))
            i += n
        else:
            i += 1
    return spans


def _splice_placeholder(tokens: tuple[Token, ...], start: int, end: int, role: str) -> tuple[Token, ...]:
    # replace tokens[start..end] with "the <role>"; re-link heads into the noun
    span = set(range(start, end + 1))
    length = end - start + 1
    noun_index = start + 1

    ext_head = 0
    ext_deprel = "root"
    for idx in range(start, end + 1):
        tok = tokens[idx - 1]
        if tok.head not in span:
            ext_head = tok.head
            ext_deprel = tok.deprel
            break

    def remap(old: int) -> int:
        if old == 0:
            return 0
        if old in span:
            return noun_index
        return old if old < start else old + 2 - length

    rebuilt: list[Token] = []
    for tok in tokens:
        if tok.index in span:
            continue
        rebuilt.append(replace(tok, index=remap(tok.index), head=remap(tok.head)))
    rebuilt.append(Token(index=start, surface="the", lemma="the", upos="DET", head=noun_index, deprel="det"))
    rebuilt.append(
        Token(
            index=noun_index,
            surface=role,
            lemma=role,
            upos="NOUN",
            head=remap(ext_head),
            deprel=ext_deprel,
        )
    )
    rebuilt.sort(key=lambda t: t.index)
    return tuple(rebuilt)


def _replace_tokens(stmt: Statement, patterns) -> Statement:
    tokens = stmt.tokens
    changed = False
    for _, alias, role in patterns:
        while True:
            target = None
            for start, end in _alias_token_spans(tokens, alias):
                if start > 1 and tokens[start - 2].surface.lower() == "the":
                    start -= 1  # absorb the existing determiner
                surfaces = [t.surface.lower() for t in tokens[start - 1 : end]]
                if surfaces == ["the", role]:
                    continue  # already the placeholder (alias collides with it)
                target = (start, end)
                break
            if target is None:
                break
            tokens = _splice_placeholder(tokens, target[0], target[1], role)
            changed = True
    if not changed:
        return stmt
    return replace(stmt, tokens=tokens, chunks=derive_chunks(tokens))


def normalize_parties(doc: Document) -> Document:
    """Replace every party alias with "the controller" / "the processor".

    Longest alias first, case-insensitive, applied to statement text and,
    in parsed mode, to the token sequence (multi-token aliases collapse to
    a det + noun pair and the tree is re-linked). Idempotent.
    """
    patterns = _alias_patterns(doc.parties)
    out = []
    for stmt in doc.statements:
        new_text = _replace_text(stmt.text, patterns)
        if stmt.parsed:
            new_stmt = _replace_tokens(stmt, patterns)
            new_stmt = replace(new_stmt, text=new_text)
        else:
            new_stmt = replace(stmt, text=new_text)
        out.append(new_stmt)
    return doc.with_statements(tuple(out))
