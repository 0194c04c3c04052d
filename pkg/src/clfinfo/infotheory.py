"""Plug-in estimators for entropy, conditional entropy, and mutual
information, all in bits (base-2 logarithms).

Estimates are computed directly from empirical relative frequencies with
no smoothing or bias correction. Each quantity is computed from its own
defining sum, so the identity I(C;X) = H(C) - H(C|X) holds only up to
floating point (tested at 1e-9) rather than by construction.
"""
from __future__ import annotations

from clfinfo import kernels
from clfinfo.distributions import Distribution, JointDistribution

__all__ = ["Bits", "entropy", "mutual_information", "conditional_entropy"]

# Nonnegative real in units of bits.
Bits = float

# Sums within this distance below zero are floating-point noise on a
# mathematically nonnegative quantity and get clamped to 0.
_NEGATIVE_GUARD = 1e-12


def entropy(d: Distribution) -> Bits:
    """H(d) = -sum p log2 p over the support."""
    return kernels.entropy_bits(d.probs, 1.0) + 0.0  # +0.0 folds -0.0 into 0.0


def mutual_information(j: JointDistribution) -> Bits:
    """I of a joint: sum over support of p(c,x) log2[p(c,x)/(p(c)p(x))].

    Values within 1e-12 below zero are clamped to 0; anything more
    negative is passed through (it would indicate a broken input).
    """
    n_rows, n_cols = j.shape
    value = kernels.mutual_information_bits(
        j.row_index, j.col_index, j.probs, n_rows, n_cols, 1.0
    )
    if -_NEGATIVE_GUARD <= value < 0.0:
        return 0.0
    return value + 0.0


def conditional_entropy(j: JointDistribution, given: str = "cols") -> Bits:
    """H(rows | cols) by default, i.e. sum_x p(x) H(rows | x); pass
    given="rows" for H(cols | rows)."""
    n_rows, n_cols = j.shape
    if given == "cols":
        value = kernels.conditional_entropy_bits(
            j.row_index, j.col_index, j.probs, n_rows, n_cols, 1.0
        )
    elif given == "rows":
        value = kernels.conditional_entropy_bits(
            j.col_index, j.row_index, j.probs, n_cols, n_rows, 1.0
        )
    else:
        raise ValueError(f"given must be 'rows' or 'cols', not {given!r}")
    if -_NEGATIVE_GUARD <= value < 0.0:
        return 0.0
    return value + 0.0
