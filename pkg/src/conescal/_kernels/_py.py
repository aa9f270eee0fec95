"""Pure-Python (numpy) compute kernels.

The compiled twin in ``_cy.pyx`` implements the same entry points with
identical semantics; :mod:`conescal._kernels` picks one backend at import
time.  The simplex pivot arithmetic is written so that both backends perform
the exact same sequence of IEEE double operations (scale the pivot row, then
``row -= factor * pivot_row`` element by element, no fused multiply-add), so
tableaus stay bit-identical across backends.
"""

import numpy as np

KIND_L1 = 0
KIND_L2 = 1
KIND_LINF = 2
KIND_MAXABS = 3
KIND_SUMABS = 4


def seminorm_many(kind, M, Y):
    """Evaluate a seminorm on every row of ``Y`` (shape (N, n)) -> (N,).

    ``M`` holds one functional per row for the MAXABS/SUMABS kinds and is
    ignored (may be empty) for the coordinate kinds.
    """
    if kind == KIND_L1:
        return np.abs(Y).sum(axis=1)
    if kind == KIND_L2:
        return np.sqrt((Y * Y).sum(axis=1))
    if kind == KIND_LINF:
        if Y.shape[1] == 0:
            return np.zeros(Y.shape[0])
        return np.abs(Y).max(axis=1)
    if kind == KIND_MAXABS:
        return np.abs(Y @ M.T).max(axis=1)
    if kind == KIND_SUMABS:
        return np.abs(Y @ M.T).sum(axis=1)
    raise ValueError(f"unknown seminorm kind code {kind}")


def margin_many(kind, M, Y, xstar, alpha, sign):
    """Rows of ``Y`` -> <xstar, y> + sign * alpha * psi(y)."""
    return Y @ xstar + (sign * alpha) * seminorm_many(kind, M, Y)


def simplex_pivot_loop(T, basis, ncols_eligible, cost_eps, piv_eps, max_iter):
    """Run Bland-rule simplex pivots on tableau ``T`` in place.

    ``T`` has shape (m+1, ncols+1): m constraint rows, the objective row
    last, the right-hand side in the last column.  ``basis[i]`` is the column
    currently basic in row i.  Only columns ``< ncols_eligible`` may enter.

    Returns 0 (optimal), 1 (unbounded) or 2 (iteration cap hit).
    """
    m = T.shape[0] - 1
    rhs = T.shape[1] - 1
    for _ in range(max_iter):
        obj = T[m]
        enter = -1
        for j in range(ncols_eligible):
            if obj[j] < -cost_eps:
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
        pivot(T, basis, best, enter)
    return 2


def pivot(T, basis, prow, pcol):
    """One tableau pivot: make column ``pcol`` basic in row ``prow``."""
    piv = T[prow, pcol]
    T[prow] /= piv
    factors = T[:, pcol].copy()
    factors[prow] = 0.0
    T -= np.outer(factors, T[prow])
    T[:, pcol] = 0.0
    T[prow, pcol] = 1.0
    basis[prow] = pcol
