from dpacheck.enrich import Enricher
from dpacheck.frames import ArgumentSpan, Predicate


def make_arg(words, tags=None, role="object"):
    tags = tags or tuple("NOUN" for _ in words)
    return ArgumentSpan(role=role, spans=((1, len(words)),), text=" ".join(words), words=tuple(words), tags=tuple(tags))


def enricher(res):
    return Enricher(res.lex, res.classes, res.stopwords)


def test_intended_changes_enrichment(res):
    arg = make_arg(("intended", "change"), tags=("ADJ", "NOUN"))
    out = enricher(res).enrich_argument(arg)
    # most-frequent-sense expansion of "change": the alteration/modification synset
    assert {"intended", "change", "alteration", "modification"} <= out.union


def test_stopword_only_span_adds_nothing(res):
    arg = make_arg(("the", "of"), tags=("DET", "ADP"))
    assert enricher(res).enrich_argument(arg).added == frozenset()


def test_oov_span_adds_nothing(res):
    arg = make_arg(("zzqx",))
    assert enricher(res).enrich_argument(arg).added == frozenset()


def test_predicate_enrichment_covers_verbnet_class(res):
    pred = Predicate(span=(1, 2), verbs=("employ",), text="can employ")
    out = enricher(res).enrich_predicate(pred)
    assert {"employ", "hire", "engage"} <= out.union


def test_unknown_verb_keeps_original_only(res):
    pred = Predicate(span=(1, 1), verbs=("zzqx",), text="zzqx")
    out = enricher(res).enrich_predicate(pred)
    assert out.union == frozenset({"zzqx"})


def test_enrichment_monotone(res):
    e = enricher(res)
    for words, tags in [
        (("personal", "data"), ("ADJ", "NOUN")),
        (("documented", "instruction"), ("ADJ", "NOUN")),
        (("notify", "breach"), ("VERB", "NOUN")),
    ]:
        arg = make_arg(words, tags)
        out = e.enrich_argument(arg)
        assert set(arg.words) <= set(out.original) <= out.union
    for verbs in (("process",), ("return", "delete"), ("employ",)):
        pred = Predicate(span=(1, len(verbs)), verbs=verbs, text=" ".join(verbs))
        out = e.enrich_predicate(pred)
        assert set(verbs) <= out.union


def test_added_words_never_stopwords(res):
    e = enricher(res)
    arg = make_arg(("change", "instruction", "authorization"))
    assert not e.enrich_argument(arg).added & res.stopwords


def test_memoization_returns_same_object(res):
    e = enricher(res)
    arg = make_arg(("personal", "data"))
    assert e.enrich_argument(arg) is e.enrich_argument(arg)


def test_deterministic_across_instances(res):
    arg = make_arg(("intended", "change"), tags=("ADJ", "NOUN"))
    assert enricher(res).enrich_argument(arg) == enricher(res).enrich_argument(arg)
