# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled enumeration kernels.  Same signatures as ``_pykernels``."""

import numpy as np


cdef void _weights_rec(const int[:, :, ::1] words, const int[:, ::1] add,
                       int[:, ::1] partial, long long[::1] hist,
                       Py_ssize_t level, Py_ssize_t t) noexcept nogil:
    cdef Py_ssize_t R = words.shape[1]
    cdef Py_ssize_t n = words.shape[2]
    cdef Py_ssize_t x, i, w
    if level == t - 1:
        for x in range(R):
            w = 0
            for i in range(n):
                if add[partial[level - 1, i], words[level, x, i]] != 0:
                    w += 1
            hist[w] += 1
        return
    for x in range(R):
        for i in range(n):
            partial[level, i] = add[partial[level - 1, i], words[level, x, i]]
        _weights_rec(words, add, partial, hist, level + 1, t)


def weight_histogram(const int[:, :, ::1] words, const int[:, ::1] add,
                     Py_ssize_t lo, Py_ssize_t hi):
    """Hamming-weight histogram of sum_j words[j, x_j] over GF(q).

    ``words[j, x]`` is the contribution of x_j = x (symbols are GF(q)
    codes, 0 = zero, added with ``add``).  x_1 runs over [lo, hi), the
    remaining coordinates over everything.
    """
    cdef Py_ssize_t t = words.shape[0]
    cdef Py_ssize_t n = words.shape[2]
    hist_arr = np.zeros(n + 1, dtype=np.int64)
    cdef long long[::1] hist = hist_arr
    part_arr = np.zeros((max(t, 1), n), dtype=np.int32)
    cdef int[:, ::1] partial = part_arr
    cdef Py_ssize_t x, i, w
    with nogil:
        for x in range(lo, hi):
            if t == 1:
                w = 0
                for i in range(n):
                    if words[0, x, i] != 0:
                        w += 1
                hist[w] += 1
            else:
                for i in range(n):
                    partial[0, i] = words[0, x, i]
                _weights_rec(words, add, partial, hist, 1, t)
    return hist_arr


cdef inline long long _log_add(long long s, long long x, const long long[::1] zech,
                               long long order) noexcept nogil:
    cdef long long z, d
    if s < 0:
        return x
    d = (x - s) % order
    if d < 0:
        d += order
    z = zech[d]
    if z < 0:
        return -1
    return (s + z) % order


cdef void _sums_rec(const long long[:, ::1] cands, const long long[::1] lens,
                    const long long[::1] zech, long long order,
                    long long s, Py_ssize_t level, long long[::1] out) noexcept nogil:
    cdef Py_ssize_t u = cands.shape[0]
    cdef Py_ssize_t j
    cdef long long s2
    for j in range(lens[level]):
        s2 = _log_add(s, cands[level, j], zech, order)
        if level == u - 1:
            if s2 < 0:
                out[2] += 1
            else:
                out[s2 & 1] += 1
        else:
            _sums_rec(cands, lens, zech, order, s2, level + 1, out)


def sum_class_counts(const long long[:, ::1] cands, const long long[::1] lens,
                     const long long[::1] zech, long long order,
                     Py_ssize_t lo, Py_ssize_t hi):
    """Classify x_1 + ... + x_u over all candidate tuples.

    ``cands[j, :lens[j]]`` are the discrete logs allowed for x_{j+1}; the
    first coordinate is restricted to positions [lo, hi).  Returns counts
    ``[sum is a square, sum is a nonsquare, sum is zero]``.
    """
    cdef Py_ssize_t u = cands.shape[0]
    out_arr = np.zeros(3, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef Py_ssize_t j
    cdef long long s
    with nogil:
        for j in range(lo, hi):
            s = cands[0, j]
            if u == 1:
                out[s & 1] += 1
            else:
                _sums_rec(cands, lens, zech, order, s, 1, out)
    return out_arr
