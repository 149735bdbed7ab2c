"""Extract the committed WordNet 3.0 subset into src/dpacheck/resources/wordnet/.

The subset covers every content word reachable from the catalog, the marker
lexicon, the verb class table, the committed test fixtures, and a hand-kept
extras list — each with all of its senses and the full hypernym closure, so
sense ranking, synonym sets and taxonomy depths are bit-identical to the full
database for the covered vocabulary. Index and data lines are copied verbatim.

Usage: python scripts/build_wordnet_fixture.py [--wordnet DIR]
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from dpacheck.lexres import text_words  # noqa: E402

EXTRA_WORDS = """
engage hire employ use utilize apply prosecute pursue change alteration modification
intend mean maintain keep hold inform notify advise apprise report describe
duration processing process agreement contract clause annex appendix
controller processor sub-processor subcontractor contractor provider party parties
datum data record records document documentation instruction instructions
security confidentiality integrity availability resilience encryption pseudonymization
breach incident notification notify delay undue measure measures technical
organizational organisational appropriate audit audits inspection inspections auditor
consent purpose nature type types category categories subject subjects right rights
obligation obligations liability liable damage compensation supervisory authority
authorities transfer transfers country organization organisation international
assessment impact protection officer dpo risk risks freedom freedoms person persons
natural legal requirement requirements provision provisions service services
termination expiration end return deletion delete erase destroy anonymize
payroll administration accounting university street avenue road address phone email
name identity contact detail details approval authorization authorisation written
write prior specific general documented effective perform performance fulfil fulfill
fulfilling respond request requests exercise exercising implement ensure assist help
aid support remain stay communicate consult consulting mitigate demonstrate adhere
adherence code conduct certification mechanism guarantee guarantees seek advice view
views representative representatives review reviews operation operations infringe
infringement lawful unlawful instruction comply compliance demonstrate carry suspend
terminate object objection changes addition replacement engaged storage store
transmit transmitted stored processed accidental destruction loss disclosure access
level likelihood severity vary varying member union state law laws case cases ground
grounds interest high systematic description envisaged necessity proportionality
relation envisage address effect effects consequence consequences mitigate propose
proposed take taken becoming aware hour hours day days month months year years
inspection facility facilities procedure procedures step steps cost costs business
question answer section title scope definition definitions annexes whereas recital
company firm enterprise office bank account employee employees staff personnel
salary sickness absence leave marital status birth date identification card copy
terminates provides covers governs shared following first last detail
"""


def content_words(text: str) -> set[str]:
    return {w for w in text_words(text) if not w.isdigit() and len(w) > 1}


def collect_vocab(fixture_paths: list[Path]) -> set[str]:
    vocab: set[str] = set(content_words(EXTRA_WORDS))

    catalog = json.loads((ROOT / "src/dpacheck/resources/catalog.json").read_text())
    for req in catalog["requirements"]:
        vocab |= content_words(req["text"])
        frame = req.get("frame")
        if frame:
            vocab |= set(frame["predicate"])
            vocab |= content_words(frame["phrase"])
            for arg in frame["args"]:
                vocab |= content_words(arg["text"])
    for entry in catalog["glossary"]:
        vocab |= content_words(entry["concept"])

    markers = json.loads((ROOT / "src/dpacheck/resources/markers.json").read_text())
    for words in markers.values():
        for phrase in words:
            vocab |= content_words(phrase)

    for line in (ROOT / "src/dpacheck/resources/verb_classes.tsv").read_text().splitlines():
        if line and not line.startswith("#"):
            vocab.add(line.split("\t")[0])

    for path in fixture_paths:
        if not path.exists():
            continue
        for line in path.read_text(encoding="utf-8").splitlines():
            if not line or line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) == 10:
                vocab |= content_words(cols[1])
                vocab |= content_words(cols[2])
    return vocab


def parse_data_line(line: str):
    head, _, _ = line.partition("|")
    parts = head.split()
    off = int(parts[0])
    w_cnt = int(parts[3], 16)
    p_i = 4 + 2 * w_cnt
    p_cnt = int(parts[p_i])
    hypers = []
    j = p_i + 1
    for _ in range(p_cnt):
        if parts[j] in ("@", "@i"):
            hypers.append(int(parts[j + 1]))
        j += 4
    return off, hypers


def build_pos(dict_dir: Path, out_dir: Path, pos_name: str, vocab: set[str]) -> tuple[int, int]:
    index_lines: dict[str, str] = {}
    data_lines: dict[int, str] = {}
    hypernyms: dict[int, list[int]] = {}
    license_header: list[str] = []

    for line in (dict_dir / f"data.{pos_name}").open(encoding="latin-1"):
        if line.startswith("  "):
            continue
        off, hypers = parse_data_line(line)
        data_lines[off] = line
        hypernyms[off] = hypers

    wanted_offsets: set[int] = set()
    kept_index: list[str] = []
    exceptions: dict[str, str] = {}
    exc_path = dict_dir / f"{pos_name}.exc"
    if exc_path.exists():
        for line in exc_path.open(encoding="latin-1"):
            parts = line.split()
            if len(parts) >= 2:
                exceptions[parts[0]] = parts[1]

    # candidate lemma forms: the word itself plus exception-table reductions
    # plus simple suffix detachments (full morphy runs at load time anyway)
    def forms(word: str) -> set[str]:
        out = {word, word.replace(" ", "_")}
        if word in exceptions:
            out.add(exceptions[word])
        for suffix, repl in (
            ("ses", "s"), ("xes", "x"), ("zes", "z"), ("ches", "ch"), ("shes", "sh"),
            ("ies", "y"), ("men", "man"), ("es", "e"), ("es", ""), ("ed", "e"),
            ("ed", ""), ("ing", "e"), ("ing", ""), ("s", ""),
        ):
            if word.endswith(suffix):
                cand = word[: len(word) - len(suffix)] + repl
                if cand:
                    out.add(cand)
        return out

    lemma_forms: set[str] = set()
    for word in vocab:
        lemma_forms |= forms(word)

    for line in (dict_dir / f"index.{pos_name}").open(encoding="latin-1"):
        if line.startswith("  "):
            license_header.append(line)
            continue
        parts = line.split()
        lemma = parts[0]
        if lemma not in lemma_forms:
            continue
        p_cnt = int(parts[3])
        offsets = [int(x) for x in parts[4 + p_cnt + 2 :]]
        kept_index.append(line)
        wanted_offsets.update(offsets)

    closure: set[int] = set()
    stack = list(wanted_offsets)
    while stack:
        off = stack.pop()
        if off in closure:
            continue
        closure.add(off)
        stack.extend(hypernyms.get(off, ()))

    out_dir.mkdir(parents=True, exist_ok=True)
    with (out_dir / f"index.{pos_name}").open("w", encoding="latin-1") as fh:
        fh.writelines(license_header)
        fh.writelines(sorted(kept_index))
    with (out_dir / f"data.{pos_name}").open("w", encoding="latin-1") as fh:
        fh.writelines(license_header)
        for off in sorted(closure):
            fh.write(data_lines[off])
    if exc_path.exists():
        kept_lemmas = {l.split()[0] for l in kept_index}
        with (out_dir / f"{pos_name}.exc").open("w", encoding="latin-1") as fh:
            for line in exc_path.open(encoding="latin-1"):
                parts = line.split()
                if len(parts) >= 2 and (parts[0] in vocab or parts[1] in kept_lemmas):
                    fh.write(line)
    return len(kept_index), len(closure)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--wordnet", default="/tmp/wnprobe/node_modules/wndb-with-exceptions/dict")
    args = parser.parse_args()
    dict_dir = Path(args.wordnet)
    out_dir = ROOT / "src/dpacheck/resources/wordnet"

    fixtures = sorted((ROOT / "tests" / "fixtures").glob("*.conllu")) if (ROOT / "tests" / "fixtures").exists() else []
    vocab = collect_vocab(fixtures)
    print(f"vocabulary: {len(vocab)} words (from {len(fixtures)} fixture files)")
    for pos_name in ("noun", "verb"):
        n_idx, n_syn = build_pos(dict_dir, out_dir, pos_name, vocab)
        print(f"{pos_name}: {n_idx} index entries, {n_syn} synsets")


if __name__ == "__main__":
    main()
