# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled bitset kernels, drop-in for _pykernels at widths up to 64."""

from libc.stdint cimport uint64_t

__all__ = ["lc_rows", "pivot_rows", "gf2_rank", "induced_rows"]

BACKEND_NAME = "cython"

DEF MAXN = 64


cdef inline void _load(object rows, uint64_t *buf, Py_ssize_t n) except *:
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = <uint64_t> rows[i]


cdef inline object _dump(uint64_t *buf, Py_ssize_t n):
    cdef Py_ssize_t i
    return tuple([buf[i] for i in range(n)])


cdef inline void _lc_inplace(uint64_t *buf, Py_ssize_t n, Py_ssize_t v):
    cdef uint64_t rv = buf[v]
    cdef Py_ssize_t i
    for i in range(n):
        if (rv >> i) & 1:
            buf[i] = (buf[i] ^ rv) & ~((<uint64_t> 1) << i)


def lc_rows(rows, Py_ssize_t v):
    """Complement the induced subgraph on the neighbourhood of position v."""
    cdef Py_ssize_t n = len(rows)
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 positions")
    cdef uint64_t buf[MAXN]
    _load(rows, buf, n)
    _lc_inplace(buf, n, v)
    return _dump(buf, n)


def pivot_rows(rows, Py_ssize_t u, Py_ssize_t v):
    """Pivot on the edge {u, v}: complement at v, then u, then v."""
    cdef Py_ssize_t n = len(rows)
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 positions")
    cdef uint64_t buf[MAXN]
    _load(rows, buf, n)
    _lc_inplace(buf, n, v)
    _lc_inplace(buf, n, u)
    _lc_inplace(buf, n, v)
    return _dump(buf, n)


def gf2_rank(rows):
    """Rank over GF(2) of the given bit rows."""
    cdef Py_ssize_t m = len(rows)
    cdef uint64_t pivots[MAXN]
    cdef int have[MAXN]
    cdef Py_ssize_t i, hi
    cdef uint64_t cur
    cdef int rank = 0
    for i in range(MAXN):
        have[i] = 0
    for i in range(m):
        cur = <uint64_t> rows[i]
        while cur:
            hi = 63
            while not (cur >> hi) & 1:
                hi -= 1
            if have[hi]:
                cur ^= pivots[hi]
            else:
                pivots[hi] = cur
                have[hi] = 1
                rank += 1
                break
    return rank


def induced_rows(rows, keep):
    """Restrict rows to the given positions, compacting columns in order."""
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t k = len(keep)
    if n > MAXN:
        raise ValueError("compiled kernels support at most 64 positions")
    cdef uint64_t buf[MAXN]
    cdef Py_ssize_t pos[MAXN]
    cdef Py_ssize_t i, j
    cdef uint64_t r, m
    _load(rows, buf, n)
    for j in range(k):
        pos[j] = <Py_ssize_t> keep[j]
    out = []
    for i in range(k):
        r = buf[pos[i]]
        m = 0
        for j in range(k):
            m |= ((r >> pos[j]) & 1) << j
        out.append(m)
    return tuple(out)
