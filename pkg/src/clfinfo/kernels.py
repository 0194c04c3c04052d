"""Backend selection for the entropy/MI kernels.

Prefers the compiled Cython module; falls back to the numpy implementation
when the extension is missing or CLFINFO_PURE_PYTHON is set. Both backends
implement the same contract, and `benchmarks/bench_kernels.py` compares
them for speed and agreement.
"""
from __future__ import annotations

import os

import numpy as np

if os.environ.get("CLFINFO_PURE_PYTHON"):
    from clfinfo import _kernels_py as _impl

    BACKEND = "python"
else:
    try:
        from clfinfo import _kernels_c as _impl  # type: ignore[no-redef]

        BACKEND = "native"
    except ImportError:
        from clfinfo import _kernels_py as _impl  # type: ignore[no-redef]

        BACKEND = "python"


def _f64(a) -> np.ndarray:
    return np.ascontiguousarray(a, dtype=np.float64)


def _i64(a) -> np.ndarray:
    return np.ascontiguousarray(a, dtype=np.int64)


def entropy_bits(weights, total: float = 1.0) -> float:
    return _impl.entropy_bits(_f64(weights), float(total))


def mutual_information_bits(
    rows, cols, weights, n_rows: int, n_cols: int, total: float = 1.0
) -> float:
    return _impl.mutual_information_bits(
        _i64(rows), _i64(cols), _f64(weights), int(n_rows), int(n_cols), float(total)
    )


def conditional_entropy_bits(
    rows, cols, weights, n_rows: int, n_cols: int, total: float = 1.0
) -> float:
    return _impl.conditional_entropy_bits(
        _i64(rows), _i64(cols), _f64(weights), int(n_rows), int(n_cols), float(total)
    )
