"""Lazy expansion of frame spans with semantically related words.

Only statements whose predicate already matched a requirement get their
argument spans enriched (the engine enforces that); results are memoized
per span text because the same phrases repeat heavily across a DPA.
"""

from __future__ import annotations

from dataclasses import dataclass

from .frames import ArgumentSpan, Predicate
from .lexres import NOUN, VERB, LexDB, VerbClassTable


@dataclass(frozen=True)
class EnrichedWords:
    original: tuple[str, ...]
    added: frozenset[str]

    @property
    def union(self) -> frozenset[str]:
        return frozenset(self.original) | self.added


class Enricher:
    """Span enricher with a per-run memo; pure given fixed resources."""

    def __init__(self, lex: LexDB, classes: VerbClassTable, stopwords: frozenset[str]):
        self.lex = lex
        self.classes = classes
        self.stopwords = stopwords
        self._arg_cache: dict[tuple, EnrichedWords] = {}
        self._pred_cache: dict[tuple[str, ...], EnrichedWords] = {}
        self.argument_calls = 0  # instrumentation for the laziness contract

    def enrich_argument(self, arg: ArgumentSpan) -> EnrichedWords:
        self.argument_calls += 1
        key = (arg.words, arg.tags)
        hit = self._arg_cache.get(key)
        if hit is not None:
            return hit
        added: set[str] = set()
        for lemma, tag in zip(arg.words, arg.tags):
            lemma = lemma.lower()
            if lemma in self.stopwords:
                continue
            if tag in ("NOUN", "PROPN"):
                added |= self.lex.synonyms_mfs(lemma, NOUN)
            elif tag in ("VERB", "AUX"):
                added |= self.lex.synonyms_mfs(lemma, VERB)
        original = tuple(_with_hyphen_parts(arg.words))
        added -= set(original)
        added -= set(self.stopwords)
        result = EnrichedWords(original=original, added=frozenset(added))
        self._arg_cache[key] = result
        return result

    def enrich_predicate(self, pred: Predicate) -> EnrichedWords:
        key = pred.verbs
        hit = self._pred_cache.get(key)
        if hit is not None:
            return hit
        added: set[str] = set()
        for verb in pred.verbs:
            added |= self.lex.synonyms_mfs(verb, VERB)
            added |= self.classes.classmates(verb)
        added -= set(pred.verbs)
        added -= set(self.stopwords)
        result = EnrichedWords(original=pred.verbs, added=frozenset(added))
        self._pred_cache[key] = result
        return result


def _with_hyphen_parts(words) -> list[str]:
    out: list[str] = []
    for w in words:
        w = w.lower()
        out.append(w)
        if "-" in w:
            out.extend(p for p in w.split("-") if p)
    return out
