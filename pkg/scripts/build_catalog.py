"""Serialize the requirement catalog to src/dpacheck/resources/catalog.json."""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
from catalog_data import GLOSSARY, R  # noqa: E402


def main() -> None:
    out = Path(__file__).resolve().parents[1] / "src" / "dpacheck" / "resources" / "catalog.json"
    payload = {
        "requirements": R,
        "glossary": [{"concept": c, "definition": d, "ref": ref} for c, d, ref in GLOSSARY],
    }
    out.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"wrote {out} ({len(R)} requirements, {len(GLOSSARY)} glossary entries)")


if __name__ == "__main__":
    main()
