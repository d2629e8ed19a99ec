"""Pure-Python core of the GF(2) dual-space weight scan.

This is the reference implementation of the hot loop behind
minimum-distance enumeration.  The compiled twin in ``_scan.pyx``
must produce bit-identical results; ``tests/test_kernels.py`` holds
the two against each other.

Layout: a dual-space vector (a, b) in F_2^n x F_2^n is packed into one
integer with a_i at bit 2i and b_i at bit 2i+1, so the symplectic weight
is popcount((w | w >> 1) & 0b0101...01).  Elements are enumerated along
the binary Gray-code walk over coefficient tuples: the element at step t
has coefficient mask g = t ^ (t >> 1), and one basis XOR moves the walk
forward.  Coefficients of the stabilizer generators occupy the low r_s
bits of g, so membership of the stabilizer is the zero test g >> r_s == 0.
"""

from __future__ import annotations

NO_WEIGHT = 1 << 30


def dual_weight_scan(
    basis_words: list[int],
    r_s: int,
    n: int,
    t_start: int,
    t_end: int,
    early_exit: int = 0,
    monitor_pure: bool = False,
):
    """Scan Gray-walk steps t in [t_start, t_end) over the packed dual basis.

    Returns (d_out, t_out, d_all, t_all, enumerated, exited) where d_out is
    the minimum weight over elements outside the stabilizer span and d_all
    over all nonzero elements; t_out/t_all are the first steps attaining
    them (0 when none seen).  With early_exit > 0 the scan stops at the
    first element whose monitored weight (d_all when monitor_pure, else
    d_out) is <= early_exit and reports exited = 1.
    """
    mask = 0
    for i in range(n):
        mask |= 1 << (2 * i)

    d_out = d_all = NO_WEIGHT
    t_out = t_all = 0
    enumerated = 0

    t = max(t_start, 1)
    g = t ^ (t >> 1)
    cur = 0
    gg = g
    i = 0
    while gg:
        if gg & 1:
            cur ^= basis_words[i]
        gg >>= 1
        i += 1

    while t < t_end:
        wt = ((cur | (cur >> 1)) & mask).bit_count()
        enumerated += 1
        outside = (g >> r_s) != 0
        if wt < d_all:
            d_all, t_all = wt, t
        if outside and wt < d_out:
            d_out, t_out = wt, t
        if early_exit and (monitor_pure or outside) and wt <= early_exit:
            return d_out, t_out, d_all, t_all, enumerated, 1
        t += 1
        if t < t_end:
            flip = (t & -t).bit_length() - 1
            g ^= 1 << flip
            cur ^= basis_words[flip]

    return d_out, t_out, d_all, t_all, enumerated, 0


def element_at(basis_words: list[int], t: int) -> int:
    """Packed dual element visited at Gray-walk step t."""
    g = t ^ (t >> 1)
    cur = 0
    i = 0
    while g:
        if g & 1:
            cur ^= basis_words[i]
        g >>= 1
        i += 1
    return cur
