"""Independent reference implementations used to check the estimators.

Everything here is deliberately written the slow, obvious way — dense
matrices, explicit double sums, math.fsum — and never calls into the
package's kernels.
"""
import math

import numpy as np


def entropy_bits(probs) -> float:
    return -math.fsum(p * math.log2(p) for p in probs if p > 0.0)


def mi_bits(matrix) -> float:
    """Direct double summation of p log2 p/(pq) over a dense joint."""
    m = np.asarray(matrix, dtype=np.float64)
    row = m.sum(axis=1)
    col = m.sum(axis=0)
    terms = []
    for i in range(m.shape[0]):
        for j in range(m.shape[1]):
            p = m[i, j]
            if p > 0.0:
                terms.append(p * math.log2(p / (row[i] * col[j])))
    return math.fsum(terms)


def conditional_entropy_bits(matrix) -> float:
    """H(rows | cols) = sum_x p(x) H(rows | x) over a dense joint."""
    m = np.asarray(matrix, dtype=np.float64)
    col = m.sum(axis=0)
    outer = []
    for j in range(m.shape[1]):
        if col[j] <= 0.0:
            continue
        inner = entropy_bits((m[:, j] / col[j]).tolist())
        outer.append(col[j] * inner)
    return math.fsum(outer)


def random_sparse_joint(rng: np.random.Generator, n_rows: int, n_cols: int):
    """A random joint as a dense matrix with ~30% structural zeros, every
    row and column keeping at least one positive cell."""
    m = rng.uniform(0.05, 1.0, size=(n_rows, n_cols))
    mask = rng.uniform(size=(n_rows, n_cols)) < 0.3
    # never empty a full row/column
    for i in range(n_rows):
        mask[i, rng.integers(n_cols)] = False
    for j in range(n_cols):
        mask[rng.integers(n_rows), j] = False
    m[mask] = 0.0
    return m / m.sum()


def dense_to_weights(matrix, row_labels=None, col_labels=None) -> dict:
    """Dense matrix -> {(row_label, col_label): weight} over the support."""
    m = np.asarray(matrix, dtype=np.float64)
    n_rows, n_cols = m.shape
    row_labels = row_labels or [f"r{i:03d}" for i in range(n_rows)]
    col_labels = col_labels or [f"c{j:03d}" for j in range(n_cols)]
    return {
        (row_labels[i], col_labels[j]): m[i, j]
        for i in range(n_rows)
        for j in range(n_cols)
        if m[i, j] > 0.0
    }
