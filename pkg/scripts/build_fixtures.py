"""Write the committed CoNLL-U fixtures under tests/fixtures/.

fig1.conllu / table5.conllu / listmerge.conllu come from the hand-built
parses in fixture_defs.py; dpa200.conllu is the seeded 200-statement
throughput fixture. Party maps are written as JSON sidecars.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT / "scripts"))

from fixture_defs import FIG1, LIST_MERGE, TABLE5  # noqa: E402

from dpacheck.synth import random_document, to_conllu  # noqa: E402


def sentences_to_conllu(sentences, id_prefix="S") -> str:
    lines = []
    for i, sent in enumerate(sentences, start=1):
        text = " ".join(tok[0] for tok in sent)
        lines.append(f"# sent_id = {id_prefix}{i}")
        lines.append(f"# text = {text}")
        for idx, (surface, lemma, upos, head, deprel) in enumerate(sent, start=1):
            lines.append("\t".join([str(idx), surface, lemma, upos, "_", "_", str(head), deprel, "_", "_"]))
        lines.append("")
    return "\n".join(lines) + "\n"


def main() -> None:
    out = ROOT / "tests" / "fixtures"
    out.mkdir(parents=True, exist_ok=True)

    (out / "fig1.conllu").write_text(sentences_to_conllu(FIG1), encoding="utf-8")
    (out / "table5.conllu").write_text(sentences_to_conllu(TABLE5, id_prefix="T"), encoding="utf-8")
    (out / "listmerge.conllu").write_text(sentences_to_conllu(LIST_MERGE, id_prefix="L"), encoding="utf-8")
    (out / "fig1.parties.json").write_text(
        json.dumps(
            {"controller": ["Sefer University", "Company"], "processor": ["Levico Accounting GmbH", "Levico"]},
            indent=2,
        )
        + "\n",
        encoding="utf-8",
    )

    doc = random_document(seed=1729, n_statements=200, doc_id="dpa200")
    (out / "dpa200.conllu").write_text(to_conllu(doc), encoding="utf-8")
    print(f"wrote fixtures to {out}")


if __name__ == "__main__":
    main()
