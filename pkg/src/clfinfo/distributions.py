"""Categorical distribution value types shared by the counting and
information-theory layers.

Both types keep only the support (no zero cells), store probabilities in a
fixed, sorted label order so that downstream summations are deterministic,
and validate normalization on construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterator, Mapping

import numpy as np

NORMALIZATION_TOL = 1e-12

Label = Hashable


class DistributionError(ValueError):
    """Raised when a weight table cannot form a valid distribution."""


def _checked_probs(probs: np.ndarray, what: str) -> np.ndarray:
    if probs.size == 0:
        raise DistributionError(f"{what}: no observations")
    if not np.all(np.isfinite(probs)):
        raise DistributionError(f"{what}: non-finite mass")
    if np.any(probs <= 0.0):
        raise DistributionError(f"{what}: non-positive mass on support")
    err = abs(float(np.sum(probs)) - 1.0)
    if err > NORMALIZATION_TOL:
        raise DistributionError(f"{what}: masses sum to 1{err:+.3e}")
    return probs


def _as_weight_array(weights, what: str) -> np.ndarray:
    w = np.ascontiguousarray(weights, dtype=np.float64)
    if w.size == 0:
        raise DistributionError(f"{what}: no observations")
    if not np.all(np.isfinite(w)) or np.any(w <= 0.0):
        raise DistributionError(f"{what}: weights must be positive and finite")
    return w / np.sum(w)


@dataclass(eq=False)
class Distribution:
    """A categorical distribution over an ordered label tuple.

    probs[i] is the probability of labels[i]; all entries are positive and
    sum to one within NORMALIZATION_TOL.
    """

    labels: tuple[Label, ...]
    probs: np.ndarray

    def __post_init__(self) -> None:
        self.labels = tuple(self.labels)
        self.probs = np.ascontiguousarray(self.probs, dtype=np.float64)
        if len(self.labels) != self.probs.size:
            raise DistributionError("labels and probs length mismatch")
        _checked_probs(self.probs, "Distribution")

    @classmethod
    def from_weights(cls, weights: Mapping[Label, float]) -> "Distribution":
        """Build from a label -> positive weight mapping; weights are
        normalized by their total."""
        labels = tuple(sorted(weights))
        w = _as_weight_array([weights[k] for k in labels], "Distribution")
        return cls(labels, w)

    def __len__(self) -> int:
        return len(self.labels)

    def as_dict(self) -> dict[Label, float]:
        return dict(zip(self.labels, self.probs.tolist()))


@dataclass(eq=False)
class JointDistribution:
    """A two-axis categorical distribution stored as sparse cells.

    Cells are kept in (row_label, col_label) sorted order; row_index and
    col_index address into the label tuples. Every cell mass is positive
    and the masses sum to one within NORMALIZATION_TOL.
    """

    row_labels: tuple[Label, ...]
    col_labels: tuple[Label, ...]
    row_index: np.ndarray
    col_index: np.ndarray
    probs: np.ndarray

    def __post_init__(self) -> None:
        self.row_labels = tuple(self.row_labels)
        self.col_labels = tuple(self.col_labels)
        self.row_index = np.ascontiguousarray(self.row_index, dtype=np.int64)
        self.col_index = np.ascontiguousarray(self.col_index, dtype=np.int64)
        self.probs = np.ascontiguousarray(self.probs, dtype=np.float64)
        if not (self.row_index.size == self.col_index.size == self.probs.size):
            raise DistributionError("cell arrays length mismatch")
        _checked_probs(self.probs, "JointDistribution")
        if self.row_index.min() < 0 or self.row_index.max() >= len(self.row_labels):
            raise DistributionError("row index out of range")
        if self.col_index.min() < 0 or self.col_index.max() >= len(self.col_labels):
            raise DistributionError("col index out of range")
        self._mass_cache: dict | None = None

    @classmethod
    def from_weights(
        cls, weights: Mapping[tuple[Label, Label], float]
    ) -> "JointDistribution":
        """Build from a (row, col) -> positive weight mapping.

        Weights need not be normalized; they are divided by their total.
        """
        cells = sorted(weights)
        row_labels = tuple(sorted({r for r, _ in cells}))
        col_labels = tuple(sorted({c for _, c in cells}))
        row_pos = {r: i for i, r in enumerate(row_labels)}
        col_pos = {c: i for i, c in enumerate(col_labels)}
        row_index = np.array([row_pos[r] for r, _ in cells], dtype=np.int64)
        col_index = np.array([col_pos[c] for _, c in cells], dtype=np.int64)
        w = _as_weight_array([weights[k] for k in cells], "JointDistribution")
        return cls(row_labels, col_labels, row_index, col_index, w)

    @property
    def n_cells(self) -> int:
        return self.probs.size

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_labels), len(self.col_labels))

    def cells(self) -> Iterator[tuple[Label, Label, float]]:
        for r, c, p in zip(self.row_index, self.col_index, self.probs):
            yield self.row_labels[r], self.col_labels[c], float(p)

    @property
    def mass(self) -> dict[tuple[Label, Label], float]:
        if self._mass_cache is None:
            self._mass_cache = {
                (self.row_labels[r], self.col_labels[c]): float(p)
                for r, c, p in zip(self.row_index, self.col_index, self.probs)
            }
        return self._mass_cache

    def row_marginal(self) -> Distribution:
        sums = np.bincount(
            self.row_index, weights=self.probs, minlength=len(self.row_labels)
        )
        return Distribution(self.row_labels, sums)

    def col_marginal(self) -> Distribution:
        sums = np.bincount(
            self.col_index, weights=self.probs, minlength=len(self.col_labels)
        )
        return Distribution(self.col_labels, sums)

    def transpose(self) -> "JointDistribution":
        order = np.lexsort((self.row_index, self.col_index))
        return JointDistribution(
            self.col_labels,
            self.row_labels,
            self.col_index[order],
            self.row_index[order],
            self.probs[order],
        )
