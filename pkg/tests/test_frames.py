from dpacheck.catalog import SEMANTIC_ROLES
from dpacheck.frames import demarcate, extract_frame, marker_hit
from dpacheck.model import Chunk
from dpacheck.synth import fragment_statement, obligation_statement


def frame_of(doc, sid, res):
    stmt = [s for s in doc.statements if s.id == sid][0]
    return extract_frame(stmt, res.markers)


def test_s6_frame_roles(fig1_doc, res):
    frame = frame_of(fig1_doc, "S6", res)
    assert frame.predicate.text == "processes"
    assert frame.args["actor"].text == "Levico Accounting GmbH"
    assert frame.args["object"].text == "Company personal data"
    assert frame.args["reason"].text == "for providing the service of payroll administration"


def test_statement_without_root_verb_has_no_frame(res):
    stmt = fragment_statement("f1", ("Annex", "1", "Security"))
    assert extract_frame(stmt, res.markers) is None


def test_s11_beneficiary_and_constraint(fig1_doc, res):
    frame = frame_of(fig1_doc, "S11", res)
    assert frame.args["beneficiary"].text == "Company"
    # the catalog-derived marker words label further phrases constraint, so the
    # role groups several spans; the canonical one must be among them
    stmt = [s for s in fig1_doc.statements if s.id == "S11"][0]
    constraint_spans = [stmt.span_text(*span) for span in frame.args["constraint"].spans]
    assert "without undue delay" in constraint_spans


def test_exactly_one_predicate(fig1_doc, res):
    for stmt in fig1_doc.statements:
        frame = extract_frame(stmt, res.markers)
        if frame is not None:
            assert frame.predicate.verbs
            root = stmt.root()
            assert frame.predicate.span[0] <= root.index <= frame.predicate.span[1]


def test_roles_are_legal_and_action_never_an_argument(fig1_doc, res):
    legal = set(SEMANTIC_ROLES) - {"action"}
    for stmt in fig1_doc.statements:
        frame = extract_frame(stmt, res.markers)
        if frame is None:
            continue
        assert set(frame.args) <= legal
        for arg in frame.args.values():
            for start, end in arg.spans:
                assert 1 <= start <= end <= len(stmt.tokens)


def test_determinism(fig1_doc, res):
    for stmt in fig1_doc.statements:
        assert extract_frame(stmt, res.markers) == extract_frame(stmt, res.markers)


def test_dative_beneficiary_without_prep_vp_keeps_object(res):
    stmt = obligation_statement(
        "x1",
        subject=("the", "processor"),
        verb="return",
        obj=("all", "personal", "data"),
        dative=("to", ("the", "controller")),
    )
    frame = extract_frame(stmt, res.markers)
    assert frame.args["object"].text == "all personal data"
    assert frame.args["beneficiary"].text == "the controller"


# --- marker_hit ----------------------------------------------------------------

def test_condition_marker_if(res):
    lemmas = ["if", "company", "terminate", "the", "agreement"]
    assert marker_hit(lemmas, "condition", res.markers)


def test_reference_marker_article(res):
    assert marker_hit(["article", "32(1)"], "reference", res.markers)


def test_no_time_marker_in_plain_np(res):
    assert not marker_hit(["personal", "data"], "time", res.markers)


def test_multiword_marker_needs_contiguous_sequence(res):
    assert marker_hit(["in", "accordance", "with", "article", "32"], "constraint", res.markers)
    assert not marker_hit(["accordance", "in", "with"], "constraint", res.markers)


# --- demarcate ------------------------------------------------------------------

def test_demarcate_picks_smallest_matching_chunk():
    chunks = (Chunk("VP", 2, 3), Chunk("VP", 1, 5))
    assert demarcate(3, chunks, ("VP",)) == (2, 3)


def test_demarcate_falls_back_to_token():
    assert demarcate(4, (Chunk("NP", 1, 2),), ("NP",)) == (4, 4)


def test_demarcate_on_table5_predicate(table5_doc, res):
    stmt = table5_doc.statements[0]
    root = stmt.root()
    span = demarcate(root.index, stmt.chunks, ("VP",))
    assert stmt.span_text(*span) == "can employ"


def test_demarcate_subject_np(res):
    stmt = obligation_statement("x2", subject=("the", "data", "importer"), verb="submit", obj=("records",))
    root = stmt.root()
    subj = [t for t in stmt.tokens if t.deprel == "nsubj"][0]
    span = demarcate(subj.index, stmt.chunks, ("NP",))
    assert stmt.span_text(*span) == "the data importer"


def test_frame_debug_dump_golden(table5_doc, res):
    import json

    from dpacheck.conllu import normalize_parties
    from dpacheck.frames import dump_frames

    from conftest import FIXTURES

    dump = dump_frames(normalize_parties(table5_doc).statements, res.markers)
    golden = (FIXTURES / "table5.frames.jsonl").read_text()
    assert dump == golden
    record = json.loads(dump.splitlines()[0])
    assert record["predicate"]["text"] == "can employ"
    assert record["args"]["actor"]["text"] == "the processor"
