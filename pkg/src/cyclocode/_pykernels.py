"""Fallback kernels used when the compiled extension is unavailable.

Pure Python driving numpy; the innermost coordinate is vectorized.
"""

import numpy as np


def weight_histogram(words, add, lo, hi):
    t, R, n = words.shape
    hist = np.zeros(n + 1, dtype=np.int64)
    if t == 1:
        w = np.count_nonzero(words[0, lo:hi], axis=1)
        return hist + np.bincount(w, minlength=n + 1)
    last = words[t - 1]

    def rec(level, partial):
        nonlocal hist
        if level == t - 1:
            w = np.count_nonzero(add[partial[None, :], last], axis=1)
            hist += np.bincount(w, minlength=n + 1)
            return
        for x in range(R):
            rec(level + 1, add[partial, words[level, x]])

    for x in range(lo, hi):
        rec(1, words[0, x])
    return hist


def _log_add_vec(s, xs, zech, order):
    if s < 0:
        return xs
    z = zech[(xs - s) % order]
    return np.where(z < 0, -1, (s + z) % order)


def _log_add(s, x, zech, order):
    if s < 0:
        return x
    z = zech[(x - s) % order]
    return -1 if z < 0 else (s + z) % order


def sum_class_counts(cands, lens, zech, order, lo, hi):
    u = cands.shape[0]
    out = np.zeros(3, dtype=np.int64)
    zech_list = [int(z) for z in zech]
    order = int(order)
    rows = [[int(c) for c in cands[j, :lens[j]]] for j in range(u)]
    last = np.asarray(cands[u - 1, :lens[u - 1]], dtype=np.int64)
    zech_np = np.asarray(zech, dtype=np.int64)

    def rec(level, s):
        if level == u - 1:
            res = _log_add_vec(s, last, zech_np, order)
            zero = int(np.count_nonzero(res < 0))
            odd = int(np.count_nonzero(res[res >= 0] & 1))
            out[2] += zero
            out[1] += odd
            out[0] += len(res) - zero - odd
            return
        for x in rows[level]:
            rec(level + 1, _log_add(s, x, zech_list, order))

    for j in range(lo, hi):
        s = rows[0][j]
        if u == 1:
            out[s & 1] += 1
        else:
            rec(1, s)
    return out
