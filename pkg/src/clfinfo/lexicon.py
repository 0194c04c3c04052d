"""Mandarin-to-English dictionary and English semantic inventories.

The dictionary is CC-CEDICT text (`TRAD SIMP [pin1 yin1] /gloss/gloss/`).
Glosses are normalized aggressively — lowercased, parenthetical spans
removed, leading "to "/"a "/"the " stripped — because translation is only
a bridge into the English inventories, and the inventories key on bare
lemmas.

Supersense and synset inventories are plain TSV (`lemma<TAB>category`) so
any SemCor/WordNet export can be supplied without bundling licensed data.
"""
from __future__ import annotations

import io
import logging
import re
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator, Mapping

log = logging.getLogger(__name__)

GlossMap = dict[str, frozenset[str]]

_CEDICT_LINE = re.compile(r"^(\S+)\s+(\S+)\s+\[([^\]]*)\]\s+/(.*)/\s*$")
_PARENTHETICAL = re.compile(r"\([^)]*\)")
_STRIP_PREFIXES = ("to ", "a ", "the ")


class LexiconError(ValueError):
    """Raised on unusable inventory files."""


@dataclass
class LexiconStats:
    dictionary_lines_skipped: int = 0
    inventory_lines_skipped: int = 0


@dataclass(frozen=True)
class DictionaryEntry:
    traditional: str
    simplified: str
    pinyin: str
    glosses: tuple[str, ...]


def normalize_gloss(gloss: str) -> str:
    """Lowercase, drop parenthetical spans, strip leading articles and the
    infinitive marker, trim whitespace. Returns "" for glosses that
    normalize away entirely."""
    text = _PARENTHETICAL.sub(" ", gloss.lower()).strip()
    stripped = True
    while stripped:
        stripped = False
        for prefix in _STRIP_PREFIXES:
            if text.startswith(prefix):
                text = text[len(prefix):].strip()
                stripped = True
    return " ".join(text.split())


def parse_cedict(
    lines: Iterable[str], stats: LexiconStats | None = None
) -> Iterator[DictionaryEntry]:
    """Yield raw dictionary entries, skipping comments and counting
    malformed lines."""
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\n")
        if not line or line.startswith("#"):
            continue
        match = _CEDICT_LINE.match(line)
        if not match:
            log.warning("dictionary line %d unparseable: %r", lineno, line[:60])
            if stats is not None:
                stats.dictionary_lines_skipped += 1
            continue
        traditional, simplified, pinyin, gloss_blob = match.groups()
        glosses = tuple(g for g in gloss_blob.split("/") if g.strip())
        yield DictionaryEntry(traditional, simplified, pinyin, glosses)


def load_dictionary(
    lines: Iterable[str], stats: LexiconStats | None = None
) -> GlossMap:
    """Map both traditional and simplified forms to their normalized
    English glosses."""
    accum: dict[str, set[str]] = {}
    for entry in parse_cedict(lines, stats=stats):
        glosses = {g for g in (normalize_gloss(raw) for raw in entry.glosses) if g}
        if not glosses:
            continue
        for headword in (entry.traditional, entry.simplified):
            accum.setdefault(headword, set()).update(glosses)
    return {word: frozenset(glosses) for word, glosses in accum.items()}


def load_dictionary_file(path, stats: LexiconStats | None = None) -> GlossMap:
    with io.open(path, "r", encoding="utf-8") as handle:
        return load_dictionary(handle, stats=stats)


@dataclass(frozen=True)
class SupersenseInventory:
    """English lemma -> coarse semantic categories, for one word class."""

    kind: str  # "noun" | "adjective"
    categories: tuple[str, ...]
    lemma_map: Mapping[str, frozenset[str]]

    @property
    def category_count(self) -> int:
        return len(self.categories)


@dataclass(frozen=True)
class SynsetInventory:
    """English lemma -> synonym-set identifiers (opaque strings)."""

    lemma_map: Mapping[str, frozenset[str]]


def _read_mapping_tsv(
    lines: Iterable[str], source: str, stats: LexiconStats | None
) -> dict[str, frozenset[str]]:
    accum: dict[str, set[str]] = {}
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\n")
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2 or not fields[0].strip() or not fields[1].strip():
            log.warning("%s:%d: bad inventory line %r", source, lineno, line[:60])
            if stats is not None:
                stats.inventory_lines_skipped += 1
            continue
        accum.setdefault(fields[0].strip(), set()).add(fields[1].strip())
    if not accum:
        raise LexiconError(f"{source}: inventory has no usable lines")
    return {lemma: frozenset(values) for lemma, values in accum.items()}


def load_supersenses(
    lines: Iterable[str],
    kind: str,
    source: str = "<stream>",
    stats: LexiconStats | None = None,
) -> SupersenseInventory:
    if kind not in ("noun", "adjective"):
        raise LexiconError(f"kind must be 'noun' or 'adjective', not {kind!r}")
    lemma_map = _read_mapping_tsv(lines, source, stats)
    categories = tuple(sorted(set().union(*lemma_map.values())))
    return SupersenseInventory(kind=kind, categories=categories, lemma_map=lemma_map)


def load_supersenses_file(
    path, kind: str, stats: LexiconStats | None = None
) -> SupersenseInventory:
    with io.open(path, "r", encoding="utf-8") as handle:
        return load_supersenses(handle, kind, source=str(path), stats=stats)


def load_synsets(
    lines: Iterable[str], source: str = "<stream>", stats: LexiconStats | None = None
) -> SynsetInventory:
    return SynsetInventory(lemma_map=_read_mapping_tsv(lines, source, stats))


def load_synsets_file(path, stats: LexiconStats | None = None) -> SynsetInventory:
    with io.open(path, "r", encoding="utf-8") as handle:
        return load_synsets(handle, source=str(path), stats=stats)


def _lookup_gloss(gloss: str, lemma_map: Mapping[str, frozenset[str]]) -> frozenset[str]:
    """Try the whole gloss, then its final whitespace-separated token."""
    hit = lemma_map.get(gloss)
    if hit:
        return hit
    tail = gloss.rsplit(None, 1)[-1] if gloss else ""
    if tail and tail != gloss:
        return lemma_map.get(tail, frozenset())
    return frozenset()


def map_to_supersenses(
    lemma: str, dictionary: GlossMap, inventory: SupersenseInventory
) -> frozenset[str]:
    """Union of inventory categories over the lemma's translated glosses;
    empty set when the lemma is untranslatable or unlisted."""
    out: set[str] = set()
    for gloss in dictionary.get(lemma, ()):
        out.update(_lookup_gloss(gloss, inventory.lemma_map))
    return frozenset(out)


def map_to_synsets(
    lemma: str, dictionary: GlossMap, inventory: SynsetInventory
) -> frozenset[str]:
    out: set[str] = set()
    for gloss in dictionary.get(lemma, ()):
        out.update(_lookup_gloss(gloss, inventory.lemma_map))
    return frozenset(out)
