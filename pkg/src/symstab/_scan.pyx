# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled core of the GF(2) dual-space weight scan.

Semantics are pinned by the pure-Python twin in ``_scan_py.py``; keep the
two in lockstep.  This version is limited to n <= 32 coordinates (packed
pairs fit one 64-bit word) and Gray walks of < 2^63 steps, which covers
everything inside the default enumeration budget.
"""

from libc.stdint cimport int64_t, uint64_t

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

NO_WEIGHT = 1 << 30


def dual_weight_scan(
    basis_words,
    int r_s,
    int n,
    object t_start,
    object t_end,
    object early_exit=0,
    bint monitor_pure=False,
):
    cdef uint64_t words[64]
    cdef int dim = len(basis_words)
    cdef int i
    if dim > 64 or n > 32:
        raise ValueError("compiled scan supports at most 64 basis vectors / 32 coordinates")
    for i in range(dim):
        words[i] = basis_words[i]

    cdef uint64_t mask = 0
    for i in range(n):
        mask |= <uint64_t>1 << (2 * i)

    cdef int64_t d_out = NO_WEIGHT, d_all = NO_WEIGHT
    cdef uint64_t t_out = 0, t_all = 0
    cdef uint64_t enumerated = 0
    cdef uint64_t ts = t_start, te = t_end
    cdef int64_t limit = early_exit
    cdef bint pure = monitor_pure

    cdef uint64_t t = ts if ts > 1 else 1
    cdef uint64_t g = t ^ (t >> 1)
    cdef uint64_t cur = 0, gg = g
    i = 0
    while gg:
        if gg & 1:
            cur ^= words[i]
        gg >>= 1
        i += 1

    cdef int wt, flip
    cdef bint outside, exited = False
    with nogil:
        while t < te:
            wt = __builtin_popcountll((cur | (cur >> 1)) & mask)
            enumerated += 1
            outside = (g >> r_s) != 0
            if wt < d_all:
                d_all = wt
                t_all = t
            if outside and wt < d_out:
                d_out = wt
                t_out = t
            if limit and (pure or outside) and wt <= limit:
                exited = True
                break
            t += 1
            if t < te:
                flip = __builtin_ctzll(t)
                g ^= <uint64_t>1 << flip
                cur ^= words[flip]

    return int(d_out), int(t_out), int(d_all), int(t_all), int(enumerated), int(exited)
