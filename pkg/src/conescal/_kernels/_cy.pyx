# cython: language_level=3
"""Compiled compute kernels (twin of ``_py.py``).

Pivot arithmetic follows the exact operation order of the numpy fallback
(scale pivot row, then row -= factor * pivot_row) and the build disables
FP contraction, so tableaus stay bit-identical across backends.
"""

from libc.math cimport fabs, sqrt

import numpy as np

KIND_L1 = 0
KIND_L2 = 1
KIND_LINF = 2
KIND_MAXABS = 3
KIND_SUMABS = 4


def seminorm_many(int kind, double[:, ::1] M, double[:, ::1] Y):
    """Evaluate a seminorm on every row of ``Y`` (shape (N, n)) -> (N,)."""
    cdef Py_ssize_t N = Y.shape[0]
    cdef Py_ssize_t n = Y.shape[1]
    cdef Py_ssize_t mrows = M.shape[0]
    cdef Py_ssize_t i, j, r
    cdef double acc, v, best
    out = np.zeros(N)
    cdef double[::1] o = out
    if kind == KIND_L1:
        for i in range(N):
            acc = 0.0
            for j in range(n):
                acc += fabs(Y[i, j])
            o[i] = acc
    elif kind == KIND_L2:
        for i in range(N):
            acc = 0.0
            for j in range(n):
                acc += Y[i, j] * Y[i, j]
            o[i] = sqrt(acc)
    elif kind == KIND_LINF:
        for i in range(N):
            best = 0.0
            for j in range(n):
                v = fabs(Y[i, j])
                if v > best:
                    best = v
            o[i] = best
    elif kind == KIND_MAXABS:
        for i in range(N):
            best = 0.0
            for r in range(mrows):
                acc = 0.0
                for j in range(n):
                    acc += M[r, j] * Y[i, j]
                v = fabs(acc)
                if v > best:
                    best = v
            o[i] = best
    elif kind == KIND_SUMABS:
        for i in range(N):
            acc = 0.0
            for r in range(mrows):
                v = 0.0
                for j in range(n):
                    v += M[r, j] * Y[i, j]
                acc += fabs(v)
            o[i] = acc
    else:
        raise ValueError(f"unknown seminorm kind code {kind}")
    return out


def margin_many(int kind, double[:, ::1] M, double[:, ::1] Y,
                double[::1] xstar, double alpha, double sign):
    """Rows of ``Y`` -> <xstar, y> + sign * alpha * psi(y)."""
    cdef Py_ssize_t N = Y.shape[0]
    cdef Py_ssize_t n = Y.shape[1]
    cdef Py_ssize_t i, j
    cdef double acc
    cdef double scale = sign * alpha
    psi_vals = seminorm_many(kind, M, Y)
    cdef double[::1] pv = psi_vals
    out = np.zeros(N)
    cdef double[::1] o = out
    for i in range(N):
        acc = 0.0
        for j in range(n):
            acc += Y[i, j] * xstar[j]
        o[i] = acc + scale * pv[i]
    return out


def simplex_pivot_loop(double[:, ::1] T, Py_ssize_t[::1] basis,
                       Py_ssize_t ncols_eligible, double cost_eps,
                       double piv_eps, long max_iter):
    """Run Bland-rule simplex pivots on tableau ``T`` in place.

    Same contract as the numpy twin: returns 0 (optimal), 1 (unbounded)
    or 2 (iteration cap hit).
    """
    cdef Py_ssize_t m = T.shape[0] - 1
    cdef Py_ssize_t rhs = T.shape[1] - 1
    cdef Py_ssize_t it, i, j, enter, best
    cdef double a, r, best_ratio, piv, f
    for it in range(max_iter):
        enter = -1
        for j in range(ncols_eligible):
            if T[m, j] < -cost_eps:
                enter = j
                break
        if enter < 0:
            return 0
        best = -1
        best_ratio = 0.0
        for i in range(m):
            a = T[i, enter]
            if a > piv_eps:
                r = T[i, rhs] / a
                if best < 0 or r < best_ratio or (
                    r == best_ratio and basis[i] < basis[best]
                ):
                    best = i
                    best_ratio = r
        if best < 0:
            return 1
        _pivot_impl(T, basis, best, enter)
    return 2


def pivot(double[:, ::1] T, Py_ssize_t[::1] basis, Py_ssize_t prow, Py_ssize_t pcol):
    """One tableau pivot: make column ``pcol`` basic in row ``prow``."""
    _pivot_impl(T, basis, prow, pcol)


cdef void _pivot_impl(double[:, ::1] T, Py_ssize_t[::1] basis,
                      Py_ssize_t prow, Py_ssize_t pcol):
    cdef Py_ssize_t nrows = T.shape[0]
    cdef Py_ssize_t ncols = T.shape[1]
    cdef Py_ssize_t i, j
    cdef double piv = T[prow, pcol]
    cdef double f
    for j in range(ncols):
        T[prow, j] /= piv
    for i in range(nrows):
        if i != prow:
            f = T[i, pcol]
            if f != 0.0:
                for j in range(ncols):
                    T[i, j] -= f * T[prow, j]
    for i in range(nrows):
        T[i, pcol] = 0.0
    T[prow, pcol] = 1.0
    basis[prow] = pcol
