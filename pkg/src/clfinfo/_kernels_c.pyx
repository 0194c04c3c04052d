# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled entropy/MI kernels.

Same contract as clfinfo._kernels_py (weights + total, zero weights
skipped, base-2 logs). Sums are Kahan-compensated in cell order so results
are reproducible bit-for-bit across runs.
"""
from libc.math cimport log2

import numpy as np

cimport numpy as cnp

cnp.import_array()


def entropy_bits(const double[::1] weights, double total):
    cdef Py_ssize_t i, n = weights.shape[0]
    cdef double s = 0.0, comp = 0.0, term, y, t, w
    if total <= 0.0:
        return 0.0
    for i in range(n):
        w = weights[i]
        if w <= 0.0:
            continue
        term = w * log2(w / total)
        y = term - comp
        t = s + y
        comp = (t - s) - y
        s = t
    return -s / total


def mutual_information_bits(
    const cnp.int64_t[::1] rows,
    const cnp.int64_t[::1] cols,
    const double[::1] weights,
    Py_ssize_t n_rows,
    Py_ssize_t n_cols,
    double total,
):
    cdef Py_ssize_t i, n = weights.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] row_buf = np.zeros(n_rows)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] col_buf = np.zeros(n_cols)
    cdef double[::1] row_sums = row_buf
    cdef double[::1] col_sums = col_buf
    cdef double s = 0.0, comp = 0.0, term, y, t, w
    for i in range(n):
        w = weights[i]
        if w <= 0.0:
            continue
        row_sums[rows[i]] += w
        col_sums[cols[i]] += w
    for i in range(n):
        w = weights[i]
        if w <= 0.0:
            continue
        term = w * log2((w * total) / (row_sums[rows[i]] * col_sums[cols[i]]))
        y = term - comp
        t = s + y
        comp = (t - s) - y
        s = t
    return s / total


def conditional_entropy_bits(
    const cnp.int64_t[::1] rows,
    const cnp.int64_t[::1] cols,
    const double[::1] weights,
    Py_ssize_t n_rows,
    Py_ssize_t n_cols,
    double total,
):
    cdef Py_ssize_t i, n = weights.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] col_buf = np.zeros(n_cols)
    cdef double[::1] col_sums = col_buf
    cdef double s = 0.0, comp = 0.0, term, y, t, w
    if total <= 0.0:
        return 0.0
    for i in range(n):
        w = weights[i]
        if w > 0.0:
            col_sums[cols[i]] += w
    for i in range(n):
        w = weights[i]
        if w <= 0.0:
            continue
        term = w * log2(w / col_sums[cols[i]])
        y = term - comp
        t = s + y
        comp = (t - s) - y
        s = t
    return -s / total
