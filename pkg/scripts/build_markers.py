"""Compile the base marker lexicon into src/dpacheck/resources/markers.json.

Seeds each role with its literature marker list, then adds the nouns and
verbs observed in that role's argument spans across the requirement catalog
(beneficiary markers instead collect the predicate verbs of frames that
carry a beneficiary argument, since they cue the extraction rule on the
statement's action). Requires a full WordNet directory for POS filtering.

Usage: python scripts/build_markers.py [--wordnet DIR]
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))

from dpacheck.catalog import load_catalog  # noqa: E402
from dpacheck.lexres import NOUN, VERB, load_stopwords, load_wordnet, text_words  # noqa: E402

SEED = {
    "beneficiary": ["inform", "report", "assist", "help", "aid", "support", "remain",
                    "notify", "provide", "give", "supply"],
    "condition": ["if", "once", "in case", "where", "when"],
    "constraint": ["without", "on", "in accordance with", "according to", "along", "by",
                   "under", "unless"],
    "time": ["after", "later", "prior", "before", "earlier", "as long as", "as soon as"],
    "situation": ["access", "addition", "destruction", "loss", "disclosure", "adherence",
                  "modification", "termination", "expiration"],
    "reference": ["gdpr", "dpa", "law", "jurisprudence", "legislation", "agreement",
                  "article", "contract"],
}

# extraction of the statement-side roles never keys on party placeholders' determiners etc.
EXCLUDED = {"the", "a", "an", "such", "other", "same", "certain", "any", "all"}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--wordnet", default="/tmp/wnprobe/node_modules/wndb-with-exceptions/dict")
    args = parser.parse_args()

    lex = load_wordnet(args.wordnet)
    stopwords = load_stopwords(ROOT / "src/dpacheck/resources/stopwords.txt")
    catalog = load_catalog(ROOT / "src/dpacheck/resources/catalog.json")

    lexicon: dict[str, set[str]] = {role: set(words) for role, words in SEED.items()}

    def role_words(text: str) -> set[str]:
        out = set()
        for word in text_words(text):
            if word in stopwords or word in EXCLUDED or word.isdigit():
                continue
            noun = lex.morphy(word, NOUN)
            verb = lex.morphy(word, VERB)
            if noun:
                out.add(noun)
            elif verb:
                out.add(verb)
        return out

    for req in catalog:
        if req.frame is None:
            continue
        roles = {a.role for a in req.frame.args}
        if "beneficiary" in roles:
            lexicon["beneficiary"].update(req.frame.predicate_verbs)
        for arg in req.frame.args:
            if arg.role not in lexicon:
                continue  # actor/object/reason are structural, not marker-driven
            if arg.role == "beneficiary":
                continue
            for alternative in arg.alternatives:
                lexicon[arg.role].update(role_words(alternative))

    # guard: the beneficiary cue set must not swallow plain-object predicates,
    # or the object/beneficiary routing of Table-5-style statements flips
    forbidden = {"employ", "engage", "hire", "process", "take", "have", "carry"}
    clash = lexicon["beneficiary"] & forbidden
    if clash:
        raise SystemExit(f"beneficiary markers gained object-evoking verbs: {sorted(clash)}")

    out_path = ROOT / "src/dpacheck/resources/markers.json"
    payload = {role: sorted(words) for role, words in lexicon.items()}
    out_path.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    sizes = {role: len(words) for role, words in payload.items()}
    print(f"wrote {out_path}: {sizes}")


if __name__ == "__main__":
    main()
