import shutil

import pytest

from dpacheck.lexres import (
    NOUN,
    VERB,
    ResourceError,
    default_resource_dir,
    enrich_markers,
    jaro_winkler,
    lemma_overlap,
    load_markers,
    load_stopwords,
    load_verb_classes,
    load_wordnet,
    text_words,
)

WN_DIR = default_resource_dir() / "wordnet"


def test_lookup_engage_has_senses(res):
    assert len(res.lex.senses("engage", VERB)) >= 1


def test_missing_data_verb_fails_with_filename(tmp_path):
    target = tmp_path / "wn"
    shutil.copytree(WN_DIR, target)
    (target / "data.verb").unlink()
    with pytest.raises(ResourceError, match="data.verb"):
        load_wordnet(target)


def test_oov_lemma_has_no_senses(res):
    assert res.lex.senses("zzqx", VERB) == []


# --- MFS synonyms ------------------------------------------------------------

def test_change_noun_mfs_synonyms(res):
    syns = res.lex.synonyms_mfs("change", NOUN)
    assert {"alteration", "modification"} <= syns


def test_oov_synonyms_empty(res):
    assert res.lex.synonyms_mfs("zzqx", NOUN) == set()


def test_synonyms_exclude_the_word_itself(res):
    assert "engage" not in res.lex.synonyms_mfs("engage", VERB)


# --- Wu-Palmer ----------------------------------------------------------------

def test_wup_identity(res):
    assert res.lex.wup("engage", "engage", VERB) == 1.0


def test_wup_engage_hire_matches_reference_value(res):
    assert abs(res.lex.wup("engage", "hire", VERB) - 0.4) <= 0.1
    assert abs(res.lex.wup("engage", "employ", VERB) - 0.4) <= 0.1


def test_wup_oov_is_zero(res):
    assert res.lex.wup("engage", "zzqx", VERB) == 0.0


def test_wup_symmetric(res):
    pairs = [("engage", "hire"), ("process", "maintain"), ("inform", "notify")]
    for a, b in pairs:
        assert res.lex.wup(a, b, VERB) == res.lex.wup(b, a, VERB)


# --- verb classes ---------------------------------------------------------------

def test_classmates_of_employ(res):
    mates = res.classes.classmates("employ")
    assert {"engage", "hire"} <= mates
    assert "employ" not in mates


def test_classmates_absent_verb_empty(res):
    assert res.classes.classmates("zzqx") == set()


def test_classmates_symmetric(res):
    for a, b in [("engage", "hire"), ("inform", "notify")]:
        assert (a in res.classes.classmates(b)) == (b in res.classes.classmates(a))


def test_bad_class_line_rejected(tmp_path):
    path = tmp_path / "classes.tsv"
    path.write_text("not a pair\n")
    with pytest.raises(ResourceError):
        load_verb_classes(path)


# --- Jaro-Winkler ----------------------------------------------------------------

def test_jw_identity():
    assert jaro_winkler("abc", "abc") == 1.0


def test_jw_empty():
    assert jaro_winkler("abc", "") == 0.0
    assert jaro_winkler("", "") == 1.0


def test_jw_martha():
    # hand oracle: jaro = (6/6 + 6/6 + (6-1)/6)/3 = 0.94444...;
    # prefix 3 -> 0.94444 + 3*0.1*(1-0.94444) = 0.96111
    assert abs(jaro_winkler("MARTHA", "MARHTA") - 0.961) <= 0.001


def test_jw_symmetric_and_bounded():
    pairs = [("duration", "processing"), ("abc", "abcd"), ("personal data", "personal datum")]
    for a, b in pairs:
        assert jaro_winkler(a, b) == jaro_winkler(b, a)
        assert 0.0 <= jaro_winkler(a, b) <= 1.0


def test_jw_one_only_for_equal():
    assert jaro_winkler("ab", "abc") < 1.0


# --- overlap -------------------------------------------------------------------

def test_lemma_overlap_counts_distinct_shared(res):
    assert lemma_overlap({"duration", "processing"}, {"duration", "agreement", "processing"}, res.stopwords) == 2


def test_lemma_overlap_disjoint(res):
    assert lemma_overlap({"duration"}, {"agreement"}, res.stopwords) == 0


def test_lemma_overlap_ignores_stopwords(res):
    assert lemma_overlap({"the", "of"}, {"the", "of"}, res.stopwords) == 0


def test_text_words_split_hyphens():
    assert "sub" in text_words("a sub-processor")
    assert "sub-processor" in text_words("a sub-processor")


# --- marker enrichment ------------------------------------------------------------

def test_inform_marker_gains_notify(res):
    assert {"inform", "notify"} <= res.markers.phrases["beneficiary"]


def test_multiword_markers_survive_enrichment(res):
    assert "in accordance with" in res.markers.phrases["constraint"]


def test_enriched_superset_of_base(res):
    base = load_markers(default_resource_dir() / "markers.json")
    for role, phrases in base.phrases.items():
        assert phrases <= res.markers.phrases[role]


def test_enrich_markers_idempotent(res):
    again = enrich_markers(res.markers, res.lex, res.classes)
    assert again.phrases == res.markers.phrases


def test_beneficiary_markers_exclude_object_evoking_verbs(res):
    # routing of the worked example depends on these staying out
    assert not {"employ", "engage", "hire", "process"} & res.markers.phrases["beneficiary"]


def test_stopword_list_loads():
    words = load_stopwords(default_resource_dir() / "stopwords.txt")
    assert "the" in words and "shall" in words
    assert "after" not in words  # time-marker content must stay countable


def test_lemma_overlap_symmetric_and_bounded(res):
    bags = [
        ({"duration", "processing", "the"}, {"processing", "agreement"}),
        ({"a", "b", "c"}, {"c", "b", "z"}),
        (set(), {"x"}),
    ]
    for a, b in bags:
        lab = lemma_overlap(a, b, res.stopwords)
        assert lab == lemma_overlap(b, a, res.stopwords)
        assert lab <= min(len(set(a)), len(set(b)))
