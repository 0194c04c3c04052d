"""Classifier tuple extraction from parsed sentences.

A classifier token is matched by its dependency relation, its
language-specific POS tag, or either (the default, since auto-parsed
Mandarin is inconsistent about `clf` vs the measure-word tag `M`). The
noun is the classifier's head; adjectives are `amod` dependents of that
same noun. Match patterns are configuration, not code.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from clfinfo.conllu import Sentence

MATCH_POLICIES = ("deprel_or_xpos", "deprel_only", "xpos_only")


class RulesError(ValueError):
    """Raised when extraction rules are internally inconsistent."""


@dataclass(frozen=True)
class ExtractionRules:
    classifier_deprels: frozenset[str] = frozenset({"clf"})
    classifier_xpos: frozenset[str] = frozenset({"M"})
    match_policy: str = "deprel_or_xpos"
    noun_upos: frozenset[str] = frozenset({"NOUN", "PROPN"})
    adjective_deprels: frozenset[str] = frozenset({"amod"})
    adjective_upos: frozenset[str] = frozenset({"ADJ"})

    def __post_init__(self) -> None:
        if self.match_policy not in MATCH_POLICIES:
            raise RulesError(
                f"match_policy must be one of {MATCH_POLICIES}, "
                f"not {self.match_policy!r}"
            )
        if self.match_policy in ("deprel_or_xpos", "deprel_only"):
            if not self.classifier_deprels:
                raise RulesError("classifier_deprels is empty but required by policy")
        if self.match_policy in ("deprel_or_xpos", "xpos_only"):
            if not self.classifier_xpos:
                raise RulesError("classifier_xpos is empty but required by policy")
        for name in ("noun_upos", "adjective_deprels", "adjective_upos"):
            if not getattr(self, name):
                raise RulesError(f"{name} must not be empty")

    def matches_classifier(self, deprel: str, xpos: str) -> bool:
        by_deprel = deprel in self.classifier_deprels
        by_xpos = xpos in self.classifier_xpos
        if self.match_policy == "deprel_only":
            return by_deprel
        if self.match_policy == "xpos_only":
            return by_xpos
        return by_deprel or by_xpos


@dataclass(frozen=True)
class PairObservation:
    classifier: str
    noun: str
    sentence_id: str

    def key(self) -> tuple[str, str]:
        return (self.classifier, self.noun)


@dataclass(frozen=True)
class TripleObservation:
    adjective: str
    classifier: str
    noun: str
    sentence_id: str

    def key(self) -> tuple[str, str, str]:
        return (self.adjective, self.classifier, self.noun)


def _classifier_noun_links(sentence: Sentence, rules: ExtractionRules):
    for token in sentence.tokens:
        if not rules.matches_classifier(token.deprel, token.xpos):
            continue
        if token.head == 0:
            continue
        head = sentence.tokens[token.head - 1]
        if head.upos not in rules.noun_upos:
            continue
        classifier = token.form.strip()
        noun = head.form.strip()
        if classifier and noun:
            yield classifier, noun, head


def extract_pairs(
    sentence: Sentence, rules: ExtractionRules | None = None
) -> list[PairObservation]:
    """One (classifier, noun) observation per classifier token whose head
    is a noun, in token order."""
    rules = rules or ExtractionRules()
    return [
        PairObservation(classifier, noun, sentence.source_id)
        for classifier, noun, _head in _classifier_noun_links(sentence, rules)
    ]


def extract_triples(
    sentence: Sentence, rules: ExtractionRules | None = None
) -> list[TripleObservation]:
    """(adjective, classifier, noun) observations where the adjective and
    the classifier both attach to the same noun.

    A pair whose noun carries k matching adjectives yields k triples; a
    pair with none yields no triple.
    """
    rules = rules or ExtractionRules()
    out = []
    for classifier, noun, head in _classifier_noun_links(sentence, rules):
        for token in sentence.tokens:
            if token.deprel not in rules.adjective_deprels:
                continue
            if token.upos not in rules.adjective_upos:
                continue
            if token.head != head.index:
                continue
            adjective = token.form.strip()
            if adjective:
                out.append(
                    TripleObservation(adjective, classifier, noun, sentence.source_id)
                )
    return out


def extract_corpus(
    sentences: Iterable[Sentence], rules: ExtractionRules | None = None
) -> Iterator[tuple[list[PairObservation], list[TripleObservation]]]:
    """Per-sentence extraction over a sentence stream."""
    rules = rules or ExtractionRules()
    for sentence in sentences:
        yield extract_pairs(sentence, rules), extract_triples(sentence, rules)
