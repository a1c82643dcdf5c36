# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels (see _kernels_py for docs)."""

import numpy as np

IMPLEMENTATION = "compiled"

cdef extern from *:
    int __builtin_popcountll(unsigned long long)


def sweep_1d(double[::1] lefts_by_left, double[::1] rights_by_right,
             Py_ssize_t[::1] left_pos_to_right_pos, double r, long cap=-1):
    cdef Py_ssize_t m = rights_by_right.shape[0]
    cdef unsigned char[::1] removed = np.zeros(m, dtype=np.uint8)
    cdef Py_ssize_t i = 0, j = 0
    cdef long count = 0
    cdef double beta, reach
    centers = []
    while i < m:
        if removed[i]:
            i += 1
            continue
        beta = rights_by_right[i]
        count += 1
        centers.append(beta + r)
        if cap >= 0 and count > cap:
            return count, centers
        reach = beta + 2.0 * r
        while j < m and lefts_by_left[j] <= reach:
            removed[left_pos_to_right_pos[j]] = 1
            j += 1
        i += 1
    return count, centers


cdef long _best


cdef void _dfs(unsigned long long[::1] masks, Py_ssize_t nm,
               unsigned long long uncov, long depth) noexcept:
    global _best
    cdef unsigned long long bit, mk
    cdef Py_ssize_t t
    if uncov == 0:
        if depth < _best:
            _best = depth
        return
    if depth + 1 >= _best:
        return
    bit = uncov & (~uncov + 1)
    for t in range(nm):
        mk = masks[t]
        if mk & bit:
            _dfs(masks, nm, uncov & ~mk, depth + 1)


def min_cover_size(unsigned long long[::1] masks, unsigned long long full,
                   long cap):
    global _best
    cdef Py_ssize_t nm = masks.shape[0]
    cdef unsigned long long uncovered = full, pick, mk
    cdef long used = 0, pick_gain, gain
    cdef Py_ssize_t t
    if full == 0:
        return 0
    _best = cap + 1
    while uncovered != 0 and used < _best:
        pick = 0
        pick_gain = 0
        for t in range(nm):
            mk = masks[t]
            gain = __builtin_popcountll(mk & uncovered)
            if gain > pick_gain:
                pick_gain = gain
                pick = mk
        if pick_gain == 0:
            break
        uncovered &= ~pick
        used += 1
    if uncovered == 0 and used < _best:
        _best = used
    if _best <= 1:
        return int(_best)
    _dfs(masks, nm, full, 0)
    return int(_best)
