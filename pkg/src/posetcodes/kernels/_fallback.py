"""Pure-Python (numpy-vectorized) implementations of the scan kernels.

These are the reference semantics for the compiled core in ``_core.pyx``.
All q^k codeword scans run in message-index order: message ``idx`` has
digits ``m_j = (idx // q**j) % q`` and codeword ``sum_j m_j * G[j]``.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 15


def _message_block(q: int, k: int, start: int, stop: int) -> np.ndarray:
    idx = np.arange(start, stop, dtype=np.int64)[:, None]
    powers = q ** np.arange(k, dtype=np.int64)[None, :]
    return (idx // powers) % q


def gf_rank(mat, q: int) -> int:
    """Rank of a matrix over GF(q) by forward Gaussian elimination."""
    R = np.array(mat, dtype=np.int64) % q
    if R.ndim != 2:
        raise ValueError("matrix must be 2-dimensional")
    m, n = R.shape
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
        below = np.nonzero(R[row + 1 :, col])[0] + row + 1
        if below.size:
            R[below] = (R[below] - np.outer(R[below, col], R[row])) % q
        row += 1
    return row


def support_bits(gen, q: int, down) -> np.ndarray:
    """Support-ideal bitmask of every codeword of the row span of ``gen``.

    ``down[i]`` is the principal-ideal bitmask of coordinate i; the result
    for a codeword c is ``OR(down[i] for i with c[i] != 0)``, one uint64 per
    message in index order (entry 0 is the zero codeword).
    """
    gen = np.ascontiguousarray(gen, dtype=np.int64)
    down = np.ascontiguousarray(down, dtype=np.uint64)
    k, n = gen.shape
    if down.shape != (n,):
        raise ValueError("down-set array does not match generator width")
    total = q**k
    out = np.empty(total, dtype=np.uint64)
    zero = np.uint64(0)
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        words = (_message_block(q, k, start, stop) @ gen) % q
        masks = np.where(words != 0, down[None, :], zero)
        out[start:stop] = np.bitwise_or.reduce(masks, axis=1)
    return out


def min_support_weight(gen, q: int, down) -> int:
    """Minimum support-ideal size over the nonzero codewords of ``gen``."""
    gen = np.ascontiguousarray(gen, dtype=np.int64)
    down = np.ascontiguousarray(down, dtype=np.uint64)
    k, n = gen.shape
    if k < 1:
        raise ValueError("minimum weight needs at least one generator row")
    total = q**k
    best = n + 1
    zero = np.uint64(0)
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        words = (_message_block(q, k, start, stop) @ gen) % q
        masks = np.where(words != 0, down[None, :], zero)
        bits = np.bitwise_or.reduce(masks, axis=1)
        if start == 0:
            bits = bits[1:]  # message 0 is the zero codeword
            if bits.size == 0:
                continue
        best = min(best, int(np.bitwise_count(bits).min()))
    return best


def pattern_counts(gen_cols, q: int) -> np.ndarray:
    """Histogram of codeword restrictions, as base-q keys.

    ``gen_cols`` is the (k, t) column restriction of a generator matrix; the
    key of a restricted word (c_0, ..., c_{t-1}) is ``sum_j c_j * q^(t-1-j)``.
    Returns an int64 array of length q^t summing to q^k.
    """
    gen_cols = np.ascontiguousarray(gen_cols, dtype=np.int64)
    k, t = gen_cols.shape
    total = q**k
    counts = np.zeros(q**t, dtype=np.int64)
    powers = q ** np.arange(t - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        words = (_message_block(q, k, start, stop) @ gen_cols) % q
        keys = words @ powers
        counts += np.bincount(keys, minlength=counts.size)
    return counts
