"""Builders for the analysis joints: classifier x noun, classifier x
adjective, per-category restrictions of both, and classifier x synset.

Restricted builds keep only observations whose noun (or adjective) maps
into the requested category and renormalize over the kept mass, so each
per-category analysis is a self-contained sub-corpus. Synset expansion
spreads each noun's mass uniformly over its synsets (1/m each). Nouns
outside the lexicon are dropped, never pooled into an "unknown" class,
and the dropped share is carried on the result.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

from clfinfo.counts import PairCount, TripleCount, marginalize_triples, normalize
from clfinfo.distributions import JointDistribution


class ProjectionError(ValueError):
    """Raised when an analysis joint cannot be built at all."""


@dataclass(eq=False)
class AnalysisJoint:
    """One analysis's joint distribution plus its observation accounting.

    observation_total counts the underlying tuple observations that were
    kept; dropped_observations counts those excluded by lexicon gaps or
    category restriction.
    """

    analysis: str
    joint: JointDistribution
    observation_total: int
    dropped_observations: int = 0

    @property
    def support_size(self) -> tuple[int, int]:
        return self.joint.shape

    @property
    def kept_mass(self) -> float:
        return self.observation_total / (self.observation_total + self.dropped_observations)

    @property
    def dropped_mass(self) -> float:
        return self.dropped_observations / (self.observation_total + self.dropped_observations)


def build_cn(pairs: PairCount) -> AnalysisJoint:
    """Classifier x noun joint from raw pair counts."""
    if pairs.total <= 0:
        raise ProjectionError("no pair observations")
    return AnalysisJoint("noun", normalize(pairs), pairs.total)


def build_ca(triples: TripleCount) -> AnalysisJoint:
    """Classifier x adjective joint: nouns are summed out of the triples."""
    if triples.total <= 0:
        raise ProjectionError("no triple observations")
    return AnalysisJoint("adjective", normalize(marginalize_triples(triples)), triples.total)


def restrict_pairs_to_category(
    pairs: PairCount, category: str, noun_membership: Mapping[str, frozenset[str]]
) -> PairCount:
    """Keep exactly the pairs whose noun maps into the category."""
    kept = {
        key: count
        for key, count in pairs.entries.items()
        if category in noun_membership.get(key[1], ())
    }
    return PairCount(entries=kept, total=sum(kept.values()))


def restrict_triples_to_category(
    triples: TripleCount,
    category: str,
    adjective_membership: Mapping[str, frozenset[str]],
) -> TripleCount:
    """Keep exactly the triples whose adjective maps into the category."""
    kept = {
        key: count
        for key, count in triples.entries.items()
        if category in adjective_membership.get(key[0], ())
    }
    return TripleCount(entries=kept, total=sum(kept.values()))


def build_cn_restricted(
    pairs: PairCount, category: str, noun_membership: Mapping[str, frozenset[str]]
) -> AnalysisJoint | None:
    """Classifier x noun joint over one noun category's sub-corpus,
    renormalized over the kept mass. None when the category has zero
    observations (reported as skipped, not an error)."""
    kept = restrict_pairs_to_category(pairs, category, noun_membership)
    if kept.total == 0:
        return None
    return AnalysisJoint(
        f"noun_supersense:{category}",
        normalize(kept),
        kept.total,
        dropped_observations=pairs.total - kept.total,
    )


def build_ca_restricted(
    triples: TripleCount,
    category: str,
    adjective_membership: Mapping[str, frozenset[str]],
) -> AnalysisJoint | None:
    """Classifier x adjective joint over one adjective category's
    sub-corpus (nouns marginalized out after filtering)."""
    kept = restrict_triples_to_category(triples, category, adjective_membership)
    if kept.total == 0:
        return None
    return AnalysisJoint(
        f"adjective_supersense:{category}",
        normalize(marginalize_triples(kept)),
        kept.total,
        dropped_observations=triples.total - kept.total,
    )


def split_pairs_by_synset_coverage(
    pairs: PairCount, synset_map: Mapping[str, frozenset[str]]
) -> tuple[PairCount, int]:
    """Split pair counts into (kept table, dropped count) by whether the
    noun has any synsets."""
    kept = {
        key: count for key, count in pairs.entries.items() if synset_map.get(key[1])
    }
    kept_table = PairCount(entries=kept, total=sum(kept.values()))
    return kept_table, pairs.total - kept_table.total


def expand_synsets(
    kept_pairs: PairCount, synset_map: Mapping[str, frozenset[str]]
) -> JointDistribution:
    """Classifier x synset joint: a pair (c, n) with count k and m synsets
    contributes k/m to every cell (c, s), s in synsets(n)."""
    weights: Counter = Counter()
    for (classifier, noun), count in kept_pairs.entries.items():
        synsets = synset_map[noun]
        share = count / len(synsets)
        for synset in synsets:
            weights[(classifier, synset)] += share
    if not weights:
        raise ProjectionError("synset analysis impossible: no noun has synsets")
    return JointDistribution.from_weights(weights)


def build_cs(
    pairs: PairCount, synset_map: Mapping[str, frozenset[str]]
) -> AnalysisJoint:
    """Classifier x synset joint with uniform per-noun synset weights.

    Pairs whose noun has no synsets are dropped; raises when nothing is
    left to analyze.
    """
    if pairs.total <= 0:
        raise ProjectionError("no pair observations")
    kept, dropped = split_pairs_by_synset_coverage(pairs, synset_map)
    if kept.total == 0:
        raise ProjectionError("synset analysis impossible: no noun has synsets")
    return AnalysisJoint(
        "synset",
        expand_synsets(kept, synset_map),
        kept.total,
        dropped_observations=dropped,
    )
