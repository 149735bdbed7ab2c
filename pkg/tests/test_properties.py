import string

from hypothesis import given, settings
from hypothesis import strategies as st

from dpacheck.conllu import normalize_parties
from dpacheck.engine import SATISFIED, SKIPPED, check_document
from dpacheck.enrich import Enricher
from dpacheck.evalharness import GoldAnnotations, tradeoff_curve
from dpacheck.frames import ArgumentSpan, Predicate
from dpacheck.lexres import VERB, jaro_winkler
from dpacheck.synth import random_document

SEEDS = st.integers(min_value=0, max_value=10**6)
IN_VOCAB_VERBS = [
    "engage", "hire", "employ", "process", "inform", "notify", "assist",
    "return", "delete", "transfer", "maintain", "keep", "store", "ensure",
    "implement", "document", "seek", "take", "have", "remain",
]


# --- degree bounds and satisfiability ------------------------------------------

@settings(max_examples=25, deadline=None)
@given(SEEDS)
def test_degree_bounds_and_satisfiability(res, catalog, cfg, seed):
    doc = random_document(seed)
    result = check_document(doc, catalog, cfg, res)
    for r in result.results:
        if r.status == SKIPPED:
            continue
        assert (r.status == SATISFIED) == (r.score > 0)
        req = catalog.lookup(r.requirement_id)
        if req.frame is not None:
            n = len(req.frame.args)
            for m in r.evidence:
                assert m.degree == 0.0 or (1 / (n + 1)) <= m.degree <= 1.0
                assert set(m.missing_roles) | set(m.matched_roles) == {a.role for a in req.frame.args}


def test_degree_strictly_increases_with_matched_count():
    # direct consequence of the formula, pinned for every argument count
    for n in range(1, 7):
        degrees = [(found + 1) / (n + 1) for found in range(n + 1)]
        assert degrees == sorted(degrees)
        assert len(set(degrees)) == len(degrees)


# --- appending statements never un-satisfies ---------------------------------------

@settings(max_examples=15, deadline=None)
@given(SEEDS, SEEDS)
def test_statement_append_monotone(res, catalog, cfg, seed_a, seed_b):
    base = random_document(seed_a)
    extra = random_document(seed_b)
    renamed = tuple(
        s.__class__(**{**s.__dict__, "id": f"x{i}"}) for i, s in enumerate(extra.statements)
    )
    bigger = base.with_statements(base.statements + renamed)
    before = check_document(base, catalog, cfg, res)
    after = check_document(bigger, catalog, cfg, res)
    for ra, rb in zip(before.results, after.results):
        if ra.status == SATISFIED:
            assert rb.status == SATISFIED
            assert rb.score >= ra.score - 1e-12


# --- normalization idempotence ------------------------------------------------------

@settings(max_examples=20, deadline=None)
@given(SEEDS)
def test_normalize_parties_idempotent(seed):
    doc = random_document(seed)
    once = normalize_parties(doc)
    twice = normalize_parties(once)
    assert once.statements == twice.statements


@settings(max_examples=20, deadline=None)
@given(SEEDS)
def test_no_alias_left_behind(seed):
    doc = random_document(seed)
    once = normalize_parties(doc)
    for stmt in once.statements:
        low = stmt.text.lower()
        for alias in doc.parties.controller_aliases + doc.parties.processor_aliases:
            assert alias.lower() not in low


# --- enrichment monotonicity ----------------------------------------------------------

WORDS = st.lists(
    st.sampled_from(IN_VOCAB_VERBS + ["data", "breach", "measure", "zzqx", "authorization"]),
    min_size=1,
    max_size=5,
)


@settings(max_examples=30, deadline=None)
@given(WORDS)
def test_argument_enrichment_monotone(res, words):
    arg = ArgumentSpan(
        role="object",
        spans=((1, len(words)),),
        text=" ".join(words),
        words=tuple(words),
        tags=tuple("NOUN" for _ in words),
    )
    out = Enricher(res.lex, res.classes, res.stopwords).enrich_argument(arg)
    assert set(out.original) <= out.union
    assert not out.added & res.stopwords


@settings(max_examples=30, deadline=None)
@given(st.lists(st.sampled_from(IN_VOCAB_VERBS), min_size=1, max_size=3))
def test_predicate_enrichment_monotone(res, verbs):
    pred = Predicate(span=(1, len(verbs)), verbs=tuple(verbs), text=" ".join(verbs))
    out = Enricher(res.lex, res.classes, res.stopwords).enrich_predicate(pred)
    assert set(verbs) <= out.union


# --- string/taxonomy metric axioms -----------------------------------------------------

TEXTS = st.text(alphabet=string.ascii_lowercase + " ", max_size=24)


@settings(max_examples=200, deadline=None)
@given(TEXTS, TEXTS)
def test_jaro_winkler_axioms(a, b):
    s = jaro_winkler(a, b)
    assert 0.0 <= s <= 1.0
    assert s == jaro_winkler(b, a)
    assert (s == 1.0) == (a == b)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(IN_VOCAB_VERBS), st.sampled_from(IN_VOCAB_VERBS))
def test_wup_axioms(res, a, b):
    s = res.lex.wup(a, b, VERB)
    assert 0.0 <= s <= 1.0
    assert s == res.lex.wup(b, a, VERB)
    assert res.lex.wup(a, a, VERB) == 1.0


# --- review trade-off monotonicity --------------------------------------------------------

@settings(max_examples=15, deadline=None)
@given(SEEDS)
def test_tradeoff_recall_monotone(res, catalog, cfg, seed):
    import random as _random

    doc = random_document(seed)
    result = check_document(doc, catalog, cfg, res)
    rng = _random.Random(seed)
    satisfied = [r.requirement_id for r in result.results if r.status == SATISFIED]
    # perturbed gold: drop some satisfied requirements so reviews can find misses
    gold_satisfied = [rid for rid in satisfied if rng.random() < 0.7]
    gold = GoldAnnotations(document_id=doc.id, labels={"s1": tuple(gold_satisfied)})
    taus = [0.0, 0.25, 0.5, 0.75, 1.0]
    points = tradeoff_curve([result], [gold], taus)
    recalls = [p.recall_after_review for p in points if p.recall_after_review is not None]
    fractions = [p.fraction_statements_reviewed for p in points]
    assert recalls == sorted(recalls)
    assert fractions == sorted(fractions)
