"""Document model for DPA statements: tokens, chunks, statements, parties."""

from __future__ import annotations

from dataclasses import dataclass, replace


class IngestError(ValueError):
    """Raised when an input document cannot be turned into a valid Document."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class Token:
    """One syntactic word of a statement (1-based index, UD annotations)."""

    index: int
    surface: str
    lemma: str
    upos: str
    head: int  # 0 = root
    deprel: str


@dataclass(frozen=True)
class Chunk:
    """A labeled phrase over an inclusive token-index interval."""

    label: str  # NP | VP | PP | ADVP | SBAR
    start: int
    end: int

    def contains(self, index: int) -> bool:
        return self.start <= index <= self.end

    def __len__(self) -> int:
        return self.end - self.start + 1


@dataclass(frozen=True)
class Statement:
    """A single DPA sentence, optionally with a dependency parse and chunks."""

    id: str
    text: str
    tokens: tuple[Token, ...] = ()
    chunks: tuple[Chunk, ...] = ()
    source: str = ""
    merged_from: tuple[str, ...] | None = None

    @property
    def parsed(self) -> bool:
        return bool(self.tokens)

    def root(self) -> Token | None:
        for tok in self.tokens:
            if tok.head == 0:
                return tok
        return None

    def token_at(self, index: int) -> Token:
        return self.tokens[index - 1]

    def span_text(self, start: int, end: int) -> str:
        return " ".join(t.surface for t in self.tokens[start - 1 : end])

    def span_lemmas(self, start: int, end: int) -> list[str]:
        return [t.lemma.lower() for t in self.tokens[start - 1 : end]]


@dataclass(frozen=True)
class PartyMap:
    """Names under which the controller and processor appear in the text."""

    controller_aliases: tuple[str, ...]
    processor_aliases: tuple[str, ...]

    def __post_init__(self):
        for name, aliases in (
            ("controller", self.controller_aliases),
            ("processor", self.processor_aliases),
        ):
            if not aliases:
                raise ValueError(f"{name} alias list is empty")
            for alias in aliases:
                if not alias.strip():
                    raise ValueError(f"{name} alias is empty or whitespace-only")
        ctl = {a.lower() for a in self.controller_aliases}
        prc = {a.lower() for a in self.processor_aliases}
        common = ctl & prc
        if common:
            raise ValueError(f"aliases shared between parties: {sorted(common)}")

    @staticmethod
    def make(controller: list[str] | tuple[str, ...], processor: list[str] | tuple[str, ...]) -> "PartyMap":
        return PartyMap(tuple(controller), tuple(processor))


PARSED = "parsed"
PLAIN = "plain"


@dataclass(frozen=True)
class Document:
    """An ingested DPA: statements plus the party map."""

    id: str
    statements: tuple[Statement, ...]
    parties: PartyMap
    mode: str = PARSED  # parsed | plain

    def __post_init__(self):
        if self.mode not in (PARSED, PLAIN):
            raise ValueError(f"unknown document mode {self.mode!r}")
        seen: set[str] = set()
        for stmt in self.statements:
            if stmt.id in seen:
                raise ValueError(f"duplicate statement id {stmt.id!r}")
            seen.add(stmt.id)
            if self.mode == PARSED and not stmt.parsed:
                raise ValueError(f"statement {stmt.id!r} has no tokens in parsed mode")

    def with_statements(self, statements: list[Statement] | tuple[Statement, ...]) -> "Document":
        return replace(self, statements=tuple(statements))
