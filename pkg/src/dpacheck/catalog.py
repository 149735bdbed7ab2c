"""The 45-requirement compliance catalog: definitions, frames, glossary.

The catalog is data, not code: requirements live in a JSON file so new ones
can be added by writing a frame, without touching the matcher.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

SEMANTIC_ROLES = (
    "action",
    "actor",
    "object",
    "beneficiary",
    "constraint",
    "condition",
    "time",
    "reason",
    "situation",
    "reference",
)

CATEGORIES = ("MD", "PO", "CR", "CO")
CHECK_KINDS = ("identity", "lesk", "frame")

IDENTITY_IDS = frozenset({"R1", "R2"})
LESK_IDS = frozenset({"R3", "R4", "R5", "R6", "R27", "R28", "R29"})
MANDATORY_IDS = frozenset({f"R{i}" for i in range(1, 27)})


class CatalogError(ValueError):
    """The catalog file violates its schema or the paper-fixed invariants."""


class UnknownRequirement(KeyError):
    pass


@dataclass(frozen=True)
class FrameArg:
    role: str
    text: str

    @property
    def alternatives(self) -> tuple[str, ...]:
        # multi-span arguments store their alternatives as "a | b"
        return tuple(part.strip() for part in self.text.split("|") if part.strip())


@dataclass(frozen=True)
class FrameSpec:
    predicate_verbs: tuple[str, ...]
    phrase: str
    negated: bool
    args: tuple[FrameArg, ...]

    def roles(self) -> tuple[str, ...]:
        return tuple(a.role for a in self.args)


@dataclass(frozen=True)
class RequirementDef:
    id: str
    code: str
    category: str
    mandatory: bool
    text: str
    gdpr_refs: tuple[str, ...]
    check_kind: str
    frame: FrameSpec | None = None
    note: str | None = None

    @property
    def number(self) -> int:
        return int(self.id[1:])


@dataclass(frozen=True)
class GlossaryEntry:
    concept: str
    definition: str
    gdpr_ref: str


@dataclass(frozen=True)
class Catalog:
    requirements: tuple[RequirementDef, ...]
    glossary: tuple[GlossaryEntry, ...]

    def lookup(self, req_id: str) -> RequirementDef:
        for req in self.requirements:
            if req.id == req_id:
                return req
        raise UnknownRequirement(req_id)

    def __iter__(self):
        return iter(self.requirements)

    def mandatory(self) -> tuple[RequirementDef, ...]:
        return tuple(r for r in self.requirements if r.mandatory)

    def optional(self) -> tuple[RequirementDef, ...]:
        return tuple(r for r in self.requirements if not r.mandatory)


def _load_frame(req_id: str, raw: dict) -> FrameSpec:
    verbs = tuple(v.lower() for v in raw.get("predicate", ()))
    if not verbs:
        raise CatalogError(f"{req_id}: frame predicate verb list is empty")
    args = []
    for arg in raw.get("args", ()):
        role = arg.get("role", "")
        if role not in SEMANTIC_ROLES or role == "action":
            raise CatalogError(f"{req_id}: unknown or illegal frame role {role!r}")
        text = (arg.get("text") or "").strip()
        if not text:
            raise CatalogError(f"{req_id}: empty span text for role {role!r}")
        args.append(FrameArg(role=role, text=text))
    if not args:
        raise CatalogError(f"{req_id}: frame has no arguments")
    return FrameSpec(
        predicate_verbs=verbs,
        phrase=raw.get("phrase", " ".join(verbs)),
        negated=bool(raw.get("negated", False)),
        args=tuple(args),
    )


def load_catalog(path: str | Path) -> Catalog:
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CatalogError(f"cannot read catalog {path}: {exc}") from exc

    reqs: list[RequirementDef] = []
    seen: set[str] = set()
    for entry in raw.get("requirements", ()):
        rid = entry.get("id", "")
        if not rid or rid in seen:
            raise CatalogError(f"missing or duplicate requirement id {rid!r}")
        seen.add(rid)
        kind = entry.get("check")
        if kind not in CHECK_KINDS:
            raise CatalogError(f"{rid}: unknown check kind {kind!r}")
        expected_kind = "identity" if rid in IDENTITY_IDS else "lesk" if rid in LESK_IDS else "frame"
        if kind != expected_kind:
            raise CatalogError(f"{rid}: check kind must be {expected_kind!r}, got {kind!r}")
        category = entry.get("category")
        if category not in CATEGORIES:
            raise CatalogError(f"{rid}: unknown category {category!r}")
        mandatory = bool(entry.get("mandatory"))
        if mandatory != (rid in MANDATORY_IDS):
            raise CatalogError(f"{rid}: mandatory flag contradicts the R1-R26 split")
        frame = None
        if kind == "frame":
            if "frame" not in entry:
                raise CatalogError(f"{rid}: frame required")
            frame = _load_frame(rid, entry["frame"])
        reqs.append(
            RequirementDef(
                id=rid,
                code=entry.get("code", ""),
                category=category,
                mandatory=mandatory,
                text=entry.get("text", ""),
                gdpr_refs=tuple(entry.get("gdpr_refs", ())),
                check_kind=kind,
                frame=frame,
                note=entry.get("note"),
            )
        )

    if len(reqs) != 45:
        raise CatalogError(f"expected 45 requirements, found {len(reqs)}")
    counts = {cat: sum(1 for r in reqs if r.category == cat) for cat in CATEGORIES}
    expected = {"MD": 9, "PO": 25, "CR": 3, "CO": 8}
    if counts != expected:
        raise CatalogError(f"category counts {counts} differ from {expected}")
    if sum(1 for r in reqs if r.mandatory) != 26:
        raise CatalogError("expected 26 mandatory requirements")

    glossary = tuple(
        GlossaryEntry(concept=g["concept"], definition=g["definition"], gdpr_ref=g.get("ref", ""))
        for g in raw.get("glossary", ())
    )
    concepts = [g.concept for g in glossary]
    if len(set(concepts)) != len(concepts):
        raise CatalogError("duplicate glossary concept")

    reqs.sort(key=lambda r: r.number)
    return Catalog(requirements=tuple(reqs), glossary=glossary)


def default_catalog_path() -> Path:
    return Path(__file__).parent / "resources" / "catalog.json"
