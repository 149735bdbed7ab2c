"""Phrase chunks derived from dependency trees.

CoNLL-U input carries no chunk layer, so NP/VP/PP/ADVP/SBAR chunks are
projected from dependency subtrees: each phrase head contributes the
contiguous run of its subtree, clipped at clause boundaries so that
subordinate clauses surface as separate SBAR chunks.
"""

from __future__ import annotations

from .model import Chunk, Token

# Relations that open a new clause; projections never descend through them.
CLAUSE_BOUNDARY = {
    "advcl",
    "acl",
    "acl:relcl",
    "csubj",
    "csubj:pass",
    "ccomp",
    "parataxis",
    "discourse",
    "list",
}

# Relations that start SBAR chunks of their own.
SBAR_RELS = {"advcl", "acl", "acl:relcl", "csubj", "csubj:pass"}

# A noun attached through one of these stays inside its governor's NP.
NOUN_INTERNAL = {"nmod", "nmod:poss", "compound", "flat", "flat:name", "appos", "nummod"}

NOMINAL_POS = {"NOUN", "PROPN", "PRON"}

# Modal auxiliaries never count as content verbs of a predicate.
MODAL_LEMMAS = {"shall", "will", "would", "should", "can", "could", "may", "might", "must", "ought"}


def _children(tokens: tuple[Token, ...]) -> dict[int, list[Token]]:
    kids: dict[int, list[Token]] = {}
    for tok in tokens:
        kids.setdefault(tok.head, []).append(tok)
    return kids


def _base_deprel(deprel: str) -> str:
    return deprel.split(":", 1)[0]


def _subtree_indices(
    tokens: tuple[Token, ...],
    kids: dict[int, list[Token]],
    head: Token,
    clip: set[str],
    drop_head_case: bool = False,
) -> set[int]:
    keep = {head.index}
    stack = [head]
    while stack:
        node = stack.pop()
        for child in kids.get(node.index, ()):
            rel = child.deprel
            base = _base_deprel(rel)
            if rel in clip or base in clip:
                continue
            if drop_head_case and node is head and base in ("case", "mark"):
                continue
            keep.add(child.index)
            stack.append(child)
    return keep


def _contiguous_run(indices: set[int], anchor: int) -> tuple[int, int]:
    # largest gap-free interval of `indices` containing the anchor
    lo = hi = anchor
    while lo - 1 in indices:
        lo -= 1
    while hi + 1 in indices:
        hi += 1
    return lo, hi


def _trim_punct(tokens: tuple[Token, ...], lo: int, hi: int, anchor: int) -> tuple[int, int]:
    while lo < anchor and tokens[lo - 1].upos == "PUNCT":
        lo += 1
    while hi > anchor and tokens[hi - 1].upos == "PUNCT":
        hi -= 1
    return lo, hi


def _projection(
    tokens: tuple[Token, ...],
    kids: dict[int, list[Token]],
    head: Token,
    clip: set[str],
    drop_head_case: bool = False,
) -> tuple[int, int]:
    indices = _subtree_indices(tokens, kids, head, clip, drop_head_case)
    lo, hi = _contiguous_run(indices, head.index)
    return _trim_punct(tokens, lo, hi, head.index)


def _verb_cluster(tokens: tuple[Token, ...], kids: dict[int, list[Token]], head: Token) -> tuple[int, int]:
    # aux/cop/negation cluster around the predicate head, e.g. "can employ"
    keep = {head.index}
    for child in kids.get(head.index, ()):
        base = _base_deprel(child.deprel)
        if base in ("aux", "cop"):
            keep.add(child.index)
        elif base == "compound" and child.deprel == "compound:prt":
            keep.add(child.index)
        elif base == "advmod" and (child.upos == "PART" or child.lemma.lower() in ("not", "n't", "never")):
            keep.add(child.index)
    lo, hi = _contiguous_run(keep, head.index)
    return _trim_punct(tokens, lo, hi, head.index)


def clause_projection(tokens: tuple[Token, ...], head_index: int) -> tuple[int, int]:
    """Span of a clausal head's subtree including its own mark, nested clauses clipped."""
    kids = _children(tokens)
    head = tokens[head_index - 1]
    return _projection(tokens, kids, head, CLAUSE_BOUNDARY)


def derive_chunks(tokens: tuple[Token, ...]) -> tuple[Chunk, ...]:
    """Project NP/VP/PP/ADVP/SBAR chunks from a single-rooted dependency tree."""
    if not tokens:
        return ()
    kids = _children(tokens)
    chunks: list[Chunk] = []

    np_clip = CLAUSE_BOUNDARY | {"conj", "cc", "punct"}
    for tok in tokens:
        base = _base_deprel(tok.deprel)

        if tok.deprel in SBAR_RELS or base in ("advcl", "acl", "csubj"):
            lo, hi = _projection(tokens, kids, tok, CLAUSE_BOUNDARY)
            chunks.append(Chunk("SBAR", lo, hi))
            if tok.upos not in NOMINAL_POS:
                continue

        if tok.upos in NOMINAL_POS and base not in NOUN_INTERNAL:
            lo, hi = _projection(tokens, kids, tok, np_clip, drop_head_case=True)
            chunks.append(Chunk("NP", lo, hi))

        has_cop = any(_base_deprel(c.deprel) == "cop" for c in kids.get(tok.index, ()))
        is_root_aux = tok.upos == "AUX" and tok.head == 0
        if (tok.upos == "VERB" and base not in ("advcl", "acl", "csubj")) or has_cop or is_root_aux:
            lo, hi = _verb_cluster(tokens, kids, tok)
            chunks.append(Chunk("VP", lo, hi))

        if tok.upos == "ADP" and base == "case" and tok.head:
            parent = tokens[tok.head - 1]
            if _base_deprel(parent.deprel) == "obl":
                indices = _subtree_indices(tokens, kids, parent, np_clip | {"punct"})
                lo, hi = _contiguous_run(indices, parent.index)
                lo = min(lo, tok.index)
                lo, hi = _trim_punct(tokens, lo, hi, tok.index)
                chunks.append(Chunk("PP", lo, hi))

        if tok.upos == "ADV" and base == "advmod" and tok.head:
            parent = tokens[tok.head - 1]
            if parent.upos not in ("ADV", "ADJ", "NUM", "DET"):
                lo, hi = _projection(tokens, kids, tok, CLAUSE_BOUNDARY | {"punct"})
                chunks.append(Chunk("ADVP", lo, hi))

    return _dedupe(chunks, len(tokens))


def _dedupe(chunks: list[Chunk], n_tokens: int) -> tuple[Chunk, ...]:
    # same-label chunks must be pairwise disjoint; larger spans win
    kept: list[Chunk] = []
    occupied: dict[str, list[tuple[int, int]]] = {}
    for chunk in sorted(chunks, key=lambda c: (-(c.end - c.start), c.start, c.label)):
        if chunk.start < 1 or chunk.end > n_tokens:
            continue
        spans = occupied.setdefault(chunk.label, [])
        if any(not (chunk.end < s or chunk.start > e) for s, e in spans):
            continue
        spans.append((chunk.start, chunk.end))
        kept.append(chunk)
    kept.sort(key=lambda c: (c.start, c.end, c.label))
    return tuple(kept)
