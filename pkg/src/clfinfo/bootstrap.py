"""Nonparametric percentile bootstrap for mutual information estimates.

Resampling draws n observations with replacement from the weighted tuple
multiset, which is realized as one multinomial draw over the distinct
tuples. Replicate r seeds its own generator from (seed, r), so replicate
values do not depend on evaluation order and any parallel schedule would
reproduce the serial result exactly.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Hashable, Mapping

import numpy as np

from clfinfo.distributions import JointDistribution
from clfinfo.infotheory import Bits, mutual_information

log = logging.getLogger(__name__)

_U64 = (1 << 64) - 1

Observations = Mapping[Hashable, int]
JointBuilder = Callable[[Observations], JointDistribution]


class BootstrapError(ValueError):
    """Raised on empty observation sets or bad configuration."""


@dataclass(frozen=True)
class BootstrapConfig:
    replicates: int = 1000
    confidence: float = 0.95
    seed: int = 0

    def __post_init__(self) -> None:
        if self.replicates < 1:
            raise BootstrapError("replicates must be >= 1")
        if not 0.0 < self.confidence < 1.0:
            raise BootstrapError("confidence must be in (0, 1)")


@dataclass(frozen=True)
class IntervalEstimate:
    """Percentile interval around a full-data point estimate.

    lower <= upper always holds; the point may fall outside the interval
    in pathological resampling situations, which is logged as a warning
    rather than treated as an error.
    """

    point: Bits
    lower: Bits
    upper: Bits
    replicates_used: int

    @property
    def width(self) -> float:
        return self.upper - self.lower


def replicate_rng(seed: int, replicate: int) -> np.random.Generator:
    """Deterministic per-replicate generator; the seed is taken as an
    unsigned 64-bit value."""
    seq = np.random.SeedSequence(entropy=seed & _U64, spawn_key=(replicate,))
    return np.random.default_rng(seq)


def nearest_rank_index(q: float, n: int) -> int:
    """0-based index of the q-th nearest-rank order statistic among n."""
    rank = math.ceil(q * n)
    return min(max(rank, 1), n) - 1


def bootstrap_mi(
    observations: Observations,
    build: JointBuilder,
    config: BootstrapConfig,
) -> IntervalEstimate:
    """Percentile bootstrap confidence interval for the MI of
    build(observations).

    Each replicate resamples the full observation total with replacement,
    rebuilds the joint via `build`, and recomputes the plug-in MI.
    Degenerate replicate joints (single row or column) contribute MI 0 and
    are retained.
    """
    if hasattr(observations, "entries"):  # accept count tables directly
        observations = observations.entries
    keys = sorted(observations)
    counts = np.array([observations[k] for k in keys], dtype=np.int64)
    if counts.size and counts.min() < 1:
        raise BootstrapError("observation counts must be >= 1")
    n = int(counts.sum())
    if n < 1:
        raise BootstrapError("cannot bootstrap an empty observation set")

    point = mutual_information(build(dict(zip(keys, counts.tolist()))))

    pvals = counts / n
    replicate_values = np.empty(config.replicates, dtype=np.float64)
    for r in range(config.replicates):
        sample = replicate_rng(config.seed, r).multinomial(n, pvals)
        resampled = {
            key: int(count) for key, count in zip(keys, sample.tolist()) if count
        }
        replicate_values[r] = mutual_information(build(resampled))

    ordered = np.sort(replicate_values)
    alpha = 1.0 - config.confidence
    lower = float(ordered[nearest_rank_index(alpha / 2.0, config.replicates)])
    upper = float(ordered[nearest_rank_index(1.0 - alpha / 2.0, config.replicates)])
    if not lower <= point <= upper:
        log.warning(
            "bootstrap point estimate %.6f outside percentile interval "
            "[%.6f, %.6f]",
            point,
            lower,
            upper,
        )
    return IntervalEstimate(
        point=point, lower=lower, upper=upper, replicates_used=config.replicates
    )
