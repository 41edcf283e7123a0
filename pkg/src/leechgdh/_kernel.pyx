# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled Fincke-Pohst candidate walker; same contract as ``_kernel_py``."""
import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, ceil, floor

cnp.import_array()

from ._kernel_py import CandidateLimit


def enumerate_candidates(low, d, center, double lower, double upper, long long cap,
                         long long top_lo, long long top_hi):
    cdef double[:, ::1] L = np.ascontiguousarray(low, dtype=np.float64)
    cdef double[::1] D = np.ascontiguousarray(d, dtype=np.float64)
    cdef double[::1] C = np.ascontiguousarray(center, dtype=np.float64)
    cdef Py_ssize_t n = D.shape[0]
    cdef double tol = 1e-7 * (1.0 + abs(upper))
    cdef double ub = upper + tol
    cdef double lb = lower - tol
    cdef long long[::1] x = np.zeros(n, dtype=np.int64)
    cdef long long[::1] xmax = np.zeros(n, dtype=np.int64)
    cdef double[::1] ctr = np.zeros(n, dtype=np.float64)
    cdef double[::1] partial = np.zeros(n + 1, dtype=np.float64)
    cdef Py_ssize_t capacity = 1024
    out_arr = np.empty((capacity, n), dtype=np.int64)
    cdef long long[:, ::1] out = out_arr
    cdef Py_ssize_t count = 0
    cdef Py_ssize_t level, j
    cdef double t, rem, r, v, p

    level = n - 1
    # set up the top level
    ctr[level] = C[level]
    rem = ub
    r = sqrt(rem / D[level]) if rem > 0 else 0.0
    x[level] = <long long>ceil(ctr[level] - r)
    xmax[level] = <long long>floor(ctr[level] + r)
    if x[level] < top_lo:
        x[level] = top_lo
    if xmax[level] > top_hi:
        xmax[level] = top_hi

    while True:
        if x[level] > xmax[level]:
            level += 1
            if level == n:
                break
            x[level] += 1
            continue
        v = x[level] - ctr[level]
        p = partial[level + 1] + D[level] * v * v
        if p > ub:
            x[level] += 1
            continue
        if level == 0:
            if p >= lb:
                if count == capacity:
                    if count > cap:
                        raise CandidateLimit(cap)
                    capacity *= 2
                    new_arr = np.empty((capacity, n), dtype=np.int64)
                    new_arr[:count] = out_arr[:count]
                    out_arr = new_arr
                    out = out_arr
                for j in range(n):
                    out[count, j] = x[j]
                count += 1
                if count > cap:
                    raise CandidateLimit(cap)
            x[0] += 1
            continue
        partial[level] = p
        level -= 1
        t = 0.0
        for j in range(level + 1, n):
            t += L[j, level] * (x[j] - C[j])
        ctr[level] = C[level] - t
        rem = ub - partial[level + 1]
        r = sqrt(rem / D[level]) if rem > 0 else 0.0
        x[level] = <long long>ceil(ctr[level] - r)
        xmax[level] = <long long>floor(ctr[level] + r)
    return out_arr[:count].copy()
