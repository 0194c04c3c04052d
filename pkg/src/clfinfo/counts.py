"""Tuple count tables: accumulation, merging, persistence, and
normalization into joint distributions.

Counting is token-frequency-weighted (every corpus occurrence counts once)
and unsmoothed: keys that never occur are simply absent. Tables round-trip
through a sorted TSV format so golden files diff cleanly.
"""
from __future__ import annotations

import io
from collections import Counter
from dataclasses import dataclass, field
from typing import IO, Iterable, Iterator, Mapping, Union

from clfinfo.distributions import Distribution, JointDistribution

TSV_MAGIC = "#clfinfo-counts"
TSV_VERSION = "v1"

PairKey = tuple[str, str]
TripleKey = tuple[str, str, str]


class CountsError(ValueError):
    """Raised on invalid count tables or malformed counts files."""


@dataclass
class PairCount:
    """Counts of (classifier, noun) keys; also reused for the
    (classifier, adjective) tables produced by marginalize_triples."""

    entries: dict[PairKey, int] = field(default_factory=dict)
    total: int = 0

    ARITY = 2
    kind = "pairs"

    def __post_init__(self) -> None:
        check_total = sum(self.entries.values())
        if self.total == 0 and check_total:
            self.total = check_total
        if self.total != check_total:
            raise CountsError(f"total {self.total} != sum of counts {check_total}")
        if any(c < 1 for c in self.entries.values()):
            raise CountsError("present keys must have count >= 1")


@dataclass
class TripleCount:
    """Counts of (adjective, classifier, noun) keys."""

    entries: dict[TripleKey, int] = field(default_factory=dict)
    total: int = 0

    ARITY = 3
    kind = "triples"

    def __post_init__(self) -> None:
        check_total = sum(self.entries.values())
        if self.total == 0 and check_total:
            self.total = check_total
        if self.total != check_total:
            raise CountsError(f"total {self.total} != sum of counts {check_total}")
        if any(c < 1 for c in self.entries.values()):
            raise CountsError("present keys must have count >= 1")


CountTable = Union[PairCount, TripleCount]


def accumulate(observations: Iterable) -> CountTable:
    """Count a stream of Pair/TripleObservation values.

    The key of each observation is its multiplicity key (classifier, noun)
    or (adjective, classifier, noun). An empty stream yields an empty
    PairCount.
    """
    counter: Counter = Counter()
    arity = 2
    for obs in observations:
        key = obs.key()
        arity = len(key)
        counter[key] += 1
    cls = TripleCount if arity == 3 else PairCount
    return cls(entries=dict(counter), total=sum(counter.values()))


def accumulate_pairs(observations: Iterable) -> PairCount:
    counter: Counter = Counter(obs.key() for obs in observations)
    return PairCount(entries=dict(counter), total=sum(counter.values()))


def accumulate_triples(observations: Iterable) -> TripleCount:
    counter: Counter = Counter(obs.key() for obs in observations)
    return TripleCount(entries=dict(counter), total=sum(counter.values()))


def merge(a: CountTable, b: CountTable) -> CountTable:
    """Pointwise sum of two count tables of the same kind."""
    if type(a) is not type(b):
        raise CountsError(f"cannot merge {a.kind} with {b.kind}")
    merged = Counter(a.entries)
    merged.update(b.entries)
    return type(a)(entries=dict(merged), total=a.total + b.total)


def normalize(counts: PairCount) -> JointDistribution:
    """Empirical joint distribution: mass(c, x) = count(c, x) / total."""
    if counts.total <= 0:
        raise CountsError("no observations")
    if counts.ARITY != 2:
        raise CountsError("normalize expects a two-axis count table")
    return JointDistribution.from_weights(counts.entries)


def condition(joint: JointDistribution, col) -> Distribution:
    """Distribution over rows given one column: p(row | col)."""
    if col not in joint.col_labels:
        raise CountsError(f"unknown column label: {col!r}")
    ci = joint.col_labels.index(col)
    keep = joint.col_index == ci
    if not keep.any():
        raise CountsError(f"column {col!r} has zero marginal")
    labels = tuple(joint.row_labels[r] for r in joint.row_index[keep])
    return Distribution.from_weights(dict(zip(labels, joint.probs[keep])))


def marginalize_triples(triples: TripleCount) -> PairCount:
    """Sum the noun axis out of (adjective, classifier, noun) counts,
    producing a (classifier, adjective) table."""
    if triples.total <= 0:
        raise CountsError("no observations")
    out: Counter = Counter()
    for (adjective, classifier, _noun), count in triples.entries.items():
        out[(classifier, adjective)] += count
    return PairCount(entries=dict(out), total=triples.total)


def write_counts(counts: CountTable, out: IO[str]) -> None:
    """Serialize a count table as sorted TSV with a kind header."""
    out.write(f"{TSV_MAGIC} {TSV_VERSION} {counts.kind}\n")
    for key in sorted(counts.entries):
        out.write("\t".join(key) + f"\t{counts.entries[key]}\n")


def write_counts_file(counts: CountTable, path) -> None:
    with io.open(path, "w", encoding="utf-8", newline="\n") as out:
        write_counts(counts, out)


def read_counts(lines: Iterable[str], source: str = "<stream>") -> CountTable:
    """Parse a counts TSV, validating the header and per-line shape."""
    it: Iterator[str] = iter(lines)
    try:
        header = next(it).rstrip("\n")
    except StopIteration:
        raise CountsError(f"{source}: empty counts file") from None
    parts = header.split(" ")
    if len(parts) != 3 or parts[0] != TSV_MAGIC or parts[1] != TSV_VERSION:
        raise CountsError(f"{source}: bad counts header: {header!r}")
    kind = parts[2]
    if kind not in ("pairs", "triples"):
        raise CountsError(f"{source}: unknown counts kind: {kind!r}")
    arity = 2 if kind == "pairs" else 3
    entries: dict = {}
    for lineno, line in enumerate(it, start=2):
        line = line.rstrip("\n")
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != arity + 1:
            raise CountsError(
                f"{source}:{lineno}: expected {arity + 1} columns, got {len(fields)}"
            )
        key = tuple(fields[:arity])
        if key in entries:
            raise CountsError(f"{source}:{lineno}: duplicate key {key!r}")
        try:
            count = int(fields[arity])
        except ValueError:
            raise CountsError(
                f"{source}:{lineno}: non-integer count {fields[arity]!r}"
            ) from None
        if count < 1:
            raise CountsError(f"{source}:{lineno}: count must be >= 1")
        entries[key] = count
    cls = PairCount if kind == "pairs" else TripleCount
    return cls(entries=entries, total=sum(entries.values()))


def read_counts_file(path) -> CountTable:
    with io.open(path, "r", encoding="utf-8") as handle:
        return read_counts(handle, source=str(path))
