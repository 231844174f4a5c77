# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled scan kernels; semantics match ``_fallback`` exactly.

Codeword scans walk messages in index order with an odometer: incrementing
digit p adds generator row p to the running codeword, so each of the q^k
words costs O(n) field additions instead of a full k x n product.
"""

import numpy as np

from libc.stdint cimport int64_t, uint64_t


cdef inline int popcount64(uint64_t x) nogil:
    x = x - ((x >> 1) & 0x5555555555555555UL)
    x = (x & 0x3333333333333333UL) + ((x >> 2) & 0x3333333333333333UL)
    x = (x + (x >> 4)) & 0x0f0f0f0f0f0f0f0fUL
    return <int>((x * 0x0101010101010101UL) >> 56)


cdef inline int64_t modinv(int64_t a, int64_t q) nogil:
    # Fermat: a^(q-2) mod q for prime q; products stay below 2^32.
    cdef int64_t result = 1
    cdef int64_t base = a % q
    cdef int64_t e = q - 2
    while e > 0:
        if e & 1:
            result = (result * base) % q
        base = (base * base) % q
        e >>= 1
    return result


def gf_rank(mat, int q):
    """Rank of a matrix over GF(q) by forward Gaussian elimination."""
    R = np.array(mat, dtype=np.int64) % q
    if R.ndim != 2:
        raise ValueError("matrix must be 2-dimensional")
    cdef int64_t[:, ::1] a = np.ascontiguousarray(R)
    cdef Py_ssize_t m = a.shape[0]
    cdef Py_ssize_t n = a.shape[1]
    cdef Py_ssize_t row = 0, col, i, j, pr
    cdef int64_t inv, f, t
    cdef int64_t qq = q
    for col in range(n):
        if row == m:
            break
        pr = -1
        for i in range(row, m):
            if a[i, col] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != row:
            for j in range(n):
                t = a[row, j]
                a[row, j] = a[pr, j]
                a[pr, j] = t
        inv = modinv(a[row, col], qq)
        for j in range(n):
            a[row, j] = (a[row, j] * inv) % qq
        for i in range(row + 1, m):
            f = a[i, col]
            if f != 0:
                for j in range(n):
                    t = (a[i, j] - f * a[row, j]) % qq
                    if t < 0:
                        t += qq
                    a[i, j] = t
        row += 1
    return int(row)


cdef inline Py_ssize_t checked_total(int q, Py_ssize_t k) except -1:
    cdef Py_ssize_t total = 1
    cdef Py_ssize_t i
    for i in range(k):
        if total > (<Py_ssize_t>1 << 44) // q:
            raise OverflowError("q^k too large for a kernel scan")
        total *= q
    return total


def support_bits(gen, int q, down):
    """Support-ideal bitmask of every codeword; see _fallback.support_bits."""
    cdef const int64_t[:, ::1] g = np.ascontiguousarray(gen, dtype=np.int64)
    cdef const uint64_t[::1] dn = np.ascontiguousarray(down, dtype=np.uint64)
    cdef Py_ssize_t k = g.shape[0]
    cdef Py_ssize_t n = g.shape[1]
    if dn.shape[0] != n:
        raise ValueError("down-set array does not match generator width")
    cdef Py_ssize_t total = checked_total(q, k)
    out = np.empty(total, dtype=np.uint64)
    cdef uint64_t[::1] o = out
    cw_arr = np.zeros(n, dtype=np.int64)
    m_arr = np.zeros(k if k else 1, dtype=np.int64)
    cdef int64_t[::1] cw = cw_arr
    cdef int64_t[::1] m = m_arr
    cdef Py_ssize_t idx, p, j
    cdef uint64_t bits
    cdef int64_t qq = q
    o[0] = 0
    with nogil:
        for idx in range(1, total):
            p = 0
            while True:
                for j in range(n):
                    cw[j] += g[p, j]
                    if cw[j] >= qq:
                        cw[j] -= qq
                m[p] += 1
                if m[p] == qq:
                    m[p] = 0
                    p += 1
                else:
                    break
            bits = 0
            for j in range(n):
                if cw[j] != 0:
                    bits |= dn[j]
            o[idx] = bits
    return out


def min_support_weight(gen, int q, down):
    """Minimum support-ideal size over nonzero codewords."""
    cdef const int64_t[:, ::1] g = np.ascontiguousarray(gen, dtype=np.int64)
    cdef const uint64_t[::1] dn = np.ascontiguousarray(down, dtype=np.uint64)
    cdef Py_ssize_t k = g.shape[0]
    cdef Py_ssize_t n = g.shape[1]
    if k < 1:
        raise ValueError("minimum weight needs at least one generator row")
    if dn.shape[0] != n:
        raise ValueError("down-set array does not match generator width")
    cdef Py_ssize_t total = checked_total(q, k)
    cw_arr = np.zeros(n, dtype=np.int64)
    m_arr = np.zeros(k, dtype=np.int64)
    cdef int64_t[::1] cw = cw_arr
    cdef int64_t[::1] m = m_arr
    cdef Py_ssize_t idx, p, j
    cdef uint64_t bits
    cdef int best = <int>n + 1
    cdef int w
    cdef int64_t qq = q
    with nogil:
        for idx in range(1, total):
            p = 0
            while True:
                for j in range(n):
                    cw[j] += g[p, j]
                    if cw[j] >= qq:
                        cw[j] -= qq
                m[p] += 1
                if m[p] == qq:
                    m[p] = 0
                    p += 1
                else:
                    break
            bits = 0
            for j in range(n):
                if cw[j] != 0:
                    bits |= dn[j]
            w = popcount64(bits)
            if w < best:
                best = w
    return int(best)


def pattern_counts(gen_cols, int q):
    """Histogram of codeword restrictions; see _fallback.pattern_counts."""
    cdef const int64_t[:, ::1] g = np.ascontiguousarray(gen_cols, dtype=np.int64)
    cdef Py_ssize_t k = g.shape[0]
    cdef Py_ssize_t t = g.shape[1]
    cdef Py_ssize_t total = checked_total(q, k)
    cdef Py_ssize_t nkeys = checked_total(q, t)
    counts = np.zeros(nkeys, dtype=np.int64)
    cdef int64_t[::1] c = counts
    cw_arr = np.zeros(t if t else 1, dtype=np.int64)
    m_arr = np.zeros(k if k else 1, dtype=np.int64)
    cdef int64_t[::1] cw = cw_arr
    cdef int64_t[::1] m = m_arr
    cdef Py_ssize_t idx, p, j, key
    cdef int64_t qq = q
    c[0] = 1  # message 0: all-zero restriction
    with nogil:
        for idx in range(1, total):
            p = 0
            while True:
                for j in range(t):
                    cw[j] += g[p, j]
                    if cw[j] >= qq:
                        cw[j] -= qq
                m[p] += 1
                if m[p] == qq:
                    m[p] = 0
                    p += 1
                else:
                    break
            key = 0
            for j in range(t):
                key = key * qq + cw[j]
            c[key] += 1
    return counts
