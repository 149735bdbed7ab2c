"""Lexical resources: WordNet (WNDB files), verb classes, markers, stopwords.

The WordNet loader reads the plain-text WNDB format (index.noun/index.verb/
data.noun/data.verb plus the *.exc morphology exception lists). Synset ids
are the offset numbers found in the first column; files are parsed
sequentially, so subset fixtures with non-positional offsets load the same
way as a full database directory.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

NOUN = "n"
VERB = "v"

_POS_FILES = {NOUN: "noun", VERB: "verb"}

MARKER_ROLES = ("beneficiary", "condition", "constraint", "time", "situation", "reference")


class ResourceError(RuntimeError):
    """A lexical resource file is missing or malformed."""


@dataclass(frozen=True)
class Synset:
    id: tuple[int, str]  # (offset, pos)
    lemmas: tuple[str, ...]
    hypernyms: tuple[tuple[int, str], ...]


# morphy detachment rules, per POS: (suffix, replacement)
_NOUN_RULES = (
    ("ses", "s"), ("xes", "x"), ("zes", "z"), ("ches", "ch"), ("shes", "sh"),
    ("ies", "y"), ("men", "man"), ("s", ""),
)
_VERB_RULES = (
    ("ies", "y"), ("es", "e"), ("es", ""), ("ed", "e"), ("ed", ""),
    ("ing", "e"), ("ing", ""), ("s", ""),
)


class LexDB:
    """WordNet noun/verb synsets with sense-ranked lemma indices."""

    def __init__(
        self,
        synsets: dict[tuple[int, str], Synset],
        index: dict[tuple[str, str], tuple[int, ...]],
        exceptions: dict[str, dict[str, str]],
    ):
        self.synsets = synsets
        self.index = index
        self.exceptions = exceptions
        self._depth_cache: dict[tuple[int, str], int] = {}

    # --- lookups ---------------------------------------------------------

    def senses(self, lemma: str, pos: str) -> list[Synset]:
        key = (lemma.lower().replace(" ", "_"), pos)
        return [self.synsets[(off, pos)] for off in self.index.get(key, ())]

    def mfs(self, lemma: str, pos: str) -> Synset | None:
        ss = self.senses(lemma, pos)
        return ss[0] if ss else None

    def morphy(self, word: str, pos: str) -> str | None:
        """WordNet's morphological reduction: exceptions first, then suffix rules."""
        word = word.lower()
        if (word, pos) in self.index:
            return word
        exc = self.exceptions.get(pos, {}).get(word)
        if exc and (exc, pos) in self.index:
            return exc
        rules = _NOUN_RULES if pos == NOUN else _VERB_RULES if pos == VERB else ()
        for suffix, repl in rules:
            if word.endswith(suffix):
                candidate = word[: len(word) - len(suffix)] + repl
                if candidate and (candidate, pos) in self.index:
                    return candidate
        return None

    def normalize(self, word: str) -> str:
        """Canonical comparison form: WordNet lemma when known, else lowercase."""
        word = word.lower()
        for pos in (NOUN, VERB):
            m = self.morphy(word, pos)
            if m:
                return m
        return word

    # --- semantics -------------------------------------------------------

    def synonyms_mfs(self, lemma: str, pos: str) -> set[str]:
        """Lemmas of the most frequent sense, the input word excluded."""
        syn = self.mfs(lemma, pos)
        if syn is None:
            return set()
        out = {l.replace("_", " ") for l in syn.lemmas}
        out.discard(lemma.lower())
        return out

    def _hypernym_closure(self, sid: tuple[int, str]) -> set[tuple[int, str]]:
        seen: set[tuple[int, str]] = set()
        stack = [sid]
        while stack:
            cur = stack.pop()
            if cur in seen:
                continue
            seen.add(cur)
            syn = self.synsets.get(cur)
            if syn:
                stack.extend(syn.hypernyms)
        return seen

    def depth(self, sid: tuple[int, str]) -> int:
        """Longest hypernym path length in nodes; taxonomy roots have depth 1.

        Verbs form a forest, so a virtual root above all verb trees adds one
        level (matching the convention under which the similarity scores the
        matcher is tuned for were produced).
        """
        cached = self._depth_cache.get(sid)
        if cached is not None:
            return cached
        syn = self.synsets.get(sid)
        if syn is None:
            return 0
        if not syn.hypernyms:
            d = 1
        else:
            d = 1 + max(self.depth(h) for h in syn.hypernyms)
        self._depth_cache[sid] = d
        return d

    def wup(self, lemma_a: str, lemma_b: str, pos: str) -> float:
        """Wu-Palmer similarity between most-frequent senses; 0.0 on OOV."""
        a = self.mfs(lemma_a, pos)
        b = self.mfs(lemma_b, pos)
        if a is None or b is None:
            return 0.0
        if a.id == b.id:
            return 1.0
        virtual = 1 if pos == VERB else 0
        common = self._hypernym_closure(a.id) & self._hypernym_closure(b.id)
        if common:
            lcs_depth = max(self.depth(s) for s in common) + virtual
        elif virtual:
            lcs_depth = 1  # the virtual verb root
        else:
            return 0.0
        da = self.depth(a.id) + virtual
        db = self.depth(b.id) + virtual
        return (2.0 * lcs_depth) / (da + db)


def _parse_index_line(line: str) -> tuple[str, str, tuple[int, ...]]:
    parts = line.split()
    lemma, pos = parts[0], parts[1]
    p_cnt = int(parts[3])
    offsets = tuple(int(x) for x in parts[4 + p_cnt + 2 :])
    return lemma, pos, offsets


def _parse_data_line(line: str, pos: str) -> Synset:
    head, _, _gloss = line.partition("|")
    parts = head.split()
    offset = int(parts[0])
    w_cnt = int(parts[3], 16)
    lemmas = tuple(parts[4 + 2 * i].lower() for i in range(w_cnt))
    p_i = 4 + 2 * w_cnt
    p_cnt = int(parts[p_i])
    hypernyms: list[tuple[int, str]] = []
    j = p_i + 1
    for _ in range(p_cnt):
        symbol, s_off = parts[j], int(parts[j + 1])
        j += 4
        if symbol in ("@", "@i"):
            hypernyms.append((s_off, pos))
    return Synset(id=(offset, pos), lemmas=lemmas, hypernyms=tuple(hypernyms))


def load_wordnet(resource_dir: str | Path) -> LexDB:
    """Load noun and verb WNDB files from a directory."""
    resource_dir = Path(resource_dir)
    synsets: dict[tuple[int, str], Synset] = {}
    index: dict[tuple[str, str], tuple[int, ...]] = {}
    exceptions: dict[str, dict[str, str]] = {}

    for pos in (NOUN, VERB):
        name = _POS_FILES[pos]
        data_path = resource_dir / f"data.{name}"
        index_path = resource_dir / f"index.{name}"
        for path in (data_path, index_path):
            if not path.exists():
                raise ResourceError(f"missing WordNet file: {path}")
        try:
            for line in data_path.open(encoding="latin-1"):
                if line.startswith("  ") or not line.strip():
                    continue
                syn = _parse_data_line(line, pos)
                synsets[syn.id] = syn
            for line in index_path.open(encoding="latin-1"):
                if line.startswith("  ") or not line.strip():
                    continue
                lemma, lpos, offsets = _parse_index_line(line)
                if offsets:
                    index[(lemma, lpos)] = offsets
        except (ValueError, IndexError) as exc:
            raise ResourceError(f"corrupt WordNet file {data_path.parent} ({exc})") from exc
        exc_path = resource_dir / f"{name}.exc"
        if exc_path.exists():
            table: dict[str, str] = {}
            for line in exc_path.open(encoding="latin-1"):
                parts = line.split()
                if len(parts) >= 2:
                    table[parts[0]] = parts[1]
            exceptions[pos] = table

    # dangling hypernym pointers would make depth() lie silently
    for syn in synsets.values():
        for h in syn.hypernyms:
            if h not in synsets:
                raise ResourceError(f"synset {syn.id} points to missing hypernym {h}")
    _break_cycles(synsets)
    return LexDB(synsets, index, exceptions)


def _break_cycles(synsets: dict[tuple[int, str], Synset]) -> None:
    """Drop hypernym back-edges that close a cycle.

    WordNet 3.0 ships at least one genuine verb cycle (restrain <-> inhibit);
    depth computation needs a DAG, so the edge that closes a cycle is removed,
    deterministically (synsets visited in sorted id order, edges in file order).
    """
    state: dict[tuple[int, str], int] = {}
    for start in sorted(synsets):
        if state.get(start):
            continue
        stack = [(start, iter(synsets[start].hypernyms))]
        state[start] = 1
        while stack:
            sid, it = stack[-1]
            advanced = False
            for h in it:
                mark = state.get(h, 0)
                if mark == 1:
                    syn = synsets[sid]
                    kept = tuple(x for x in syn.hypernyms if x != h)
                    synsets[sid] = Synset(id=syn.id, lemmas=syn.lemmas, hypernyms=kept)
                    continue
                if mark == 0:
                    state[h] = 1
                    stack.append((h, iter(synsets[h].hypernyms)))
                    advanced = True
                    break
            if not advanced:
                state[sid] = 2
                stack.pop()


# --- verb classes ------------------------------------------------------------

class VerbClassTable:
    """Verb lemma <-> class-id table (flat TSV compiled from a verb lexicon)."""

    def __init__(self, verb_to_classes: dict[str, set[str]]):
        self.verb_to_classes = verb_to_classes
        self.class_members: dict[str, set[str]] = {}
        for verb, classes in verb_to_classes.items():
            for cid in classes:
                self.class_members.setdefault(cid, set()).add(verb)

    def classmates(self, verb: str) -> set[str]:
        verb = verb.lower()
        out: set[str] = set()
        for cid in self.verb_to_classes.get(verb, ()):
            out |= self.class_members[cid]
        out.discard(verb)
        return out


def load_verb_classes(path: str | Path) -> VerbClassTable:
    table: dict[str, set[str]] = {}
    path = Path(path)
    if not path.exists():
        raise ResourceError(f"missing verb class table: {path}")
    for line in path.open(encoding="utf-8"):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            verb, cid = line.split("\t")
        except ValueError as exc:
            raise ResourceError(f"bad verb class line {line!r} in {path}") from exc
        table.setdefault(verb.lower(), set()).add(cid)
    return VerbClassTable(table)


# --- stopwords ---------------------------------------------------------------

def load_stopwords(path: str | Path) -> frozenset[str]:
    path = Path(path)
    if not path.exists():
        raise ResourceError(f"missing stopword list: {path}")
    words = {w.strip().lower() for w in path.open(encoding="utf-8") if w.strip() and not w.startswith("#")}
    return frozenset(words)


# --- string / bag primitives -------------------------------------------------

def jaro_winkler(s1: str, s2: str) -> float:
    """Jaro-Winkler similarity (prefix scale 0.1, max prefix 4, boost > 0.7)."""
    if s1 == s2:
        return 1.0
    if not s1 or not s2:
        return 0.0
    len1, len2 = len(s1), len(s2)
    window = max(len1, len2) // 2 - 1
    match1 = [False] * len1
    match2 = [False] * len2
    matches = 0
    for i, ch in enumerate(s1):
        lo = max(0, i - window)
        hi = min(i + window + 1, len2)
        for j in range(lo, hi):
            if not match2[j] and s2[j] == ch:
                match1[i] = match2[j] = True
                matches += 1
                break
    if matches == 0:
        return 0.0
    transpositions = 0
    k = 0
    for i in range(len1):
        if match1[i]:
            while not match2[k]:
                k += 1
            if s1[i] != s2[k]:
                transpositions += 1
            k += 1
    t = transpositions / 2.0
    jaro = (matches / len1 + matches / len2 + (matches - t) / matches) / 3.0
    if jaro <= 0.7:
        return jaro
    prefix = 0
    for a, b in zip(s1[:4], s2[:4]):
        if a != b:
            break
        prefix += 1
    return jaro + prefix * 0.1 * (1.0 - jaro)


def lemma_overlap(bag_a, bag_b, stopwords: frozenset[str]) -> int:
    """Count of distinct shared non-stopword lemmas."""
    return len((set(bag_a) & set(bag_b)) - stopwords)


_WORD_RE = re.compile(r"[a-z0-9]+(?:[-'’][a-z0-9]+)*")


def text_words(text: str) -> list[str]:
    """Lowercased word tokens; hyphenated words also contribute their parts."""
    out: list[str] = []
    for tok in _WORD_RE.findall(text.lower()):
        out.append(tok)
        if "-" in tok:
            out.extend(p for p in tok.split("-") if p)
    return out


# --- marker lexicon ----------------------------------------------------------

@dataclass(frozen=True)
class MarkerLexicon:
    """Lexical cues per semantic role; single words plus multi-word phrases."""

    phrases: dict[str, frozenset[str]]
    enriched: bool = False

    def __post_init__(self):
        for role in MARKER_ROLES:
            if role not in self.phrases:
                raise ResourceError(f"marker lexicon missing role {role!r}")

    def single_words(self, role: str) -> frozenset[str]:
        return frozenset(p for p in self.phrases[role] if " " not in p)

    def multi_words(self, role: str) -> list[tuple[str, ...]]:
        return [tuple(p.split()) for p in self.phrases[role] if " " in p]


def load_markers(path: str | Path) -> MarkerLexicon:
    path = Path(path)
    if not path.exists():
        raise ResourceError(f"missing marker lexicon: {path}")
    raw = json.loads(path.read_text(encoding="utf-8"))
    phrases = {role: frozenset(p.lower() for p in raw.get(role, [])) for role in MARKER_ROLES}
    return MarkerLexicon(phrases=phrases, enriched=False)


def enrich_markers(lexicon: MarkerLexicon, lex: LexDB, classes: VerbClassTable) -> MarkerLexicon:
    """Expand single-word markers with MFS synonyms and verb classmates."""
    if lexicon.enriched:
        return lexicon
    out: dict[str, frozenset[str]] = {}
    for role, phrases in lexicon.phrases.items():
        expanded = set(phrases)
        for phrase in phrases:
            if " " in phrase:
                continue
            added = lex.synonyms_mfs(phrase, NOUN) | lex.synonyms_mfs(phrase, VERB)
            if phrase in classes.verb_to_classes:
                added |= classes.classmates(phrase)
            expanded |= {w.lower() for w in added if " " not in w}
        out[role] = frozenset(expanded)
    return MarkerLexicon(phrases=out, enriched=True)


# --- bundled resources --------------------------------------------------------

@dataclass(frozen=True)
class Resources:
    """Everything the matcher needs, loaded once and immutable."""

    lex: LexDB
    classes: VerbClassTable
    stopwords: frozenset[str]
    markers: MarkerLexicon  # enriched

    def normalize_words(self, words) -> list[str]:
        return [self.lex.normalize(w) for w in words]


def default_resource_dir() -> Path:
    return Path(__file__).parent / "resources"


def load_resources(resource_dir: str | Path | None = None) -> Resources:
    base = Path(resource_dir) if resource_dir else default_resource_dir()
    wordnet_dir = base / "wordnet" if (base / "wordnet").exists() else base
    lex = load_wordnet(wordnet_dir)
    classes = load_verb_classes(base / "verb_classes.tsv")
    stopwords = load_stopwords(base / "stopwords.txt")
    markers = enrich_markers(load_markers(base / "markers.json"), lex, classes)
    return Resources(lex=lex, classes=classes, stopwords=stopwords, markers=markers)
