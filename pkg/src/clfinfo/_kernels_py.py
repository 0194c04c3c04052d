"""Numpy implementations of the entropy/MI kernels.

Mirrors the compiled module clfinfo._kernels_c; clfinfo.kernels selects
between the two at import time. All functions take raw nonnegative weights
plus their total, so callers can pass either normalized probabilities
(total=1.0) or resampled integer counts without an extra copy. Zero
weights are skipped (0 log 0 = 0 convention).

Logarithms are base 2 throughout; results are bits.
"""
from __future__ import annotations

import numpy as np


def entropy_bits(weights: np.ndarray, total: float) -> float:
    """Entropy of the distribution weights/total, in bits."""
    w = weights[weights > 0.0]
    if w.size == 0 or total <= 0.0:
        return 0.0
    return float(-np.sum(w * np.log2(w / total)) / total)


def mutual_information_bits(
    rows: np.ndarray,
    cols: np.ndarray,
    weights: np.ndarray,
    n_rows: int,
    n_cols: int,
    total: float,
) -> float:
    """Plug-in mutual information of a sparse joint weight table, in bits.

    rows/cols index the two axes per cell; marginals are computed from the
    same weights. Not clamped: tiny negative values from floating-point
    cancellation are returned as-is.
    """
    row_sums = np.bincount(rows, weights=weights, minlength=n_rows)
    col_sums = np.bincount(cols, weights=weights, minlength=n_cols)
    nz = weights > 0.0
    w = weights[nz]
    if w.size == 0:
        return 0.0
    ratio = (w * total) / (row_sums[rows[nz]] * col_sums[cols[nz]])
    return float(np.sum(w * np.log2(ratio)) / total)


def conditional_entropy_bits(
    rows: np.ndarray,
    cols: np.ndarray,
    weights: np.ndarray,
    n_rows: int,
    n_cols: int,
    total: float,
) -> float:
    """H(row axis | col axis) of a sparse joint weight table, in bits."""
    col_sums = np.bincount(cols, weights=weights, minlength=n_cols)
    nz = weights > 0.0
    w = weights[nz]
    if w.size == 0 or total <= 0.0:
        return 0.0
    return float(-np.sum(w * np.log2(w / col_sums[cols[nz]])) / total)
