"""Dense linear algebra over prime fields with deterministic pivoting.

Matrices are numpy int64 arrays with entries reduced mod q.  Pivots are
always chosen lowest-column-first, lowest-row-first, so echelon forms,
ranks and null spaces are reproducible across runs.
"""

from __future__ import annotations

import numpy as np

from . import kernels


def as_matrix(rows, q: int, cols: int | None = None) -> np.ndarray:
    """Coerce to an int64 matrix reduced mod q; validates rectangularity."""
    mat = np.array(rows, dtype=np.int64)
    if mat.ndim == 1:
        mat = mat.reshape(1, -1) if mat.size else mat.reshape(0, cols or 0)
    if mat.ndim != 2:
        raise ValueError("matrix data must be two-dimensional")
    if cols is not None and mat.shape[1] != cols:
        if mat.shape[0] == 0:
            mat = mat.reshape(0, cols)
        else:
            raise ValueError(f"expected {cols} columns, got {mat.shape[1]}")
    return mat % q


def rref(mat, q: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(q); returns (R, pivot_columns)."""
    R = np.array(mat, dtype=np.int64) % q
    m, n = R.shape
    pivots: list[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(R[row:, col])[0]
        if nz.size == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            R[[row, pr]] = R[[pr, row]]
        inv = pow(int(R[row, col]), -1, q)
        R[row] = (R[row] * inv) % q
        others = np.nonzero(R[:, col])[0]
        others = others[others != row]
        if others.size:
            R[others] = (R[others] - np.outer(R[others, col], R[row])) % q
        pivots.append(col)
        row += 1
    return R, pivots


def rank(mat, q: int) -> int:
    return kernels.gf_rank(np.ascontiguousarray(mat, dtype=np.int64), q)


def nullspace(mat, q: int) -> np.ndarray:
    """Canonical basis of the right null space, one basis vector per row.

    Basis vectors are indexed by the free columns of the RREF in ascending
    order, each with a 1 in its free column.
    """
    R, pivots = rref(mat, q)
    n = R.shape[1]
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for bi, fc in enumerate(free):
        basis[bi, fc] = 1
        for ri, pc in enumerate(pivots):
            basis[bi, pc] = (-int(R[ri, fc])) % q
    return basis


def row_space_canonical(mat, q: int) -> np.ndarray:
    """Canonical (RREF) basis of the row space; equal iff row spaces equal."""
    R, pivots = rref(mat, q)
    return R[: len(pivots)]
