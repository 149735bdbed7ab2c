from dpacheck.chunker import derive_chunks
from dpacheck.model import Token


def toks(*rows):
    return tuple(Token(index=i + 1, surface=s, lemma=l, upos=u, head=h, deprel=d) for i, (s, l, u, h, d) in enumerate(rows))


def by_label(chunks, label):
    return [(c.start, c.end) for c in chunks if c.label == label]


def test_determiner_noun_is_one_np():
    tokens = toks(
        ("the", "the", "DET", 2, "det"),
        ("processor", "processor", "NOUN", 3, "nsubj"),
        ("acts", "act", "VERB", 0, "root"),
    )
    assert (1, 2) in by_label(derive_chunks(tokens), "NP")


def test_aux_verb_is_one_vp():
    tokens = toks(
        ("Levico", "Levico", "PROPN", 3, "nsubj"),
        ("can", "can", "AUX", 3, "aux"),
        ("employ", "employ", "VERB", 0, "root"),
        ("sub-contractors", "sub-contractor", "NOUN", 3, "obj"),
    )
    assert (2, 3) in by_label(derive_chunks(tokens), "VP")


def test_preposition_heads_full_pp():
    tokens = toks(
        ("acts", "act", "VERB", 0, "root"),
        ("without", "without", "ADP", 4, "case"),
        ("undue", "undue", "ADJ", 4, "amod"),
        ("delay", "delay", "NOUN", 1, "obl"),
    )
    assert (2, 4) in by_label(derive_chunks(tokens), "PP")


def test_subordinate_clause_is_sbar(fig1_doc):
    s12 = fig1_doc.statements[11]
    sbars = [s12.span_text(c.start, c.end) for c in s12.chunks if c.label == "SBAR"]
    assert "if the Company terminates the agreement" in sbars


def test_ranges_within_bounds(fig1_doc):
    for stmt in fig1_doc.statements:
        n = len(stmt.tokens)
        for chunk in stmt.chunks:
            assert 1 <= chunk.start <= chunk.end <= n


def test_same_label_chunks_disjoint(fig1_doc):
    for stmt in fig1_doc.statements:
        seen: dict[str, list[tuple[int, int]]] = {}
        for chunk in stmt.chunks:
            for s, e in seen.get(chunk.label, []):
                assert chunk.end < s or chunk.start > e, (stmt.id, chunk)
            seen.setdefault(chunk.label, []).append((chunk.start, chunk.end))


def test_relative_clause_clipped_out_of_np():
    # "the processing of personal data that Levico performs"
    tokens = toks(
        ("governs", "govern", "VERB", 0, "root"),
        ("the", "the", "DET", 3, "det"),
        ("processing", "processing", "NOUN", 1, "obj"),
        ("of", "of", "ADP", 6, "case"),
        ("personal", "personal", "ADJ", 6, "amod"),
        ("data", "data", "NOUN", 3, "nmod"),
        ("that", "that", "PRON", 9, "obj"),
        ("Levico", "Levico", "PROPN", 9, "nsubj"),
        ("performs", "perform", "VERB", 6, "acl:relcl"),
    )
    chunks = derive_chunks(tokens)
    assert (2, 6) in by_label(chunks, "NP")
    assert (7, 9) in by_label(chunks, "SBAR")


def test_copular_predicate_forms_vp():
    tokens = toks(
        ("Levico", "Levico", "PROPN", 4, "nsubj"),
        ("shall", "shall", "AUX", 4, "aux"),
        ("be", "be", "AUX", 4, "cop"),
        ("liable", "liable", "ADJ", 0, "root"),
    )
    assert (2, 4) in by_label(derive_chunks(tokens), "VP")
