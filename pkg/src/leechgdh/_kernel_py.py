"""Pure-Python Fincke-Pohst candidate walker (fallback for the compiled kernel).

Finds every integer ``x`` with ``lower - tol <= q(x - c) <= upper + tol`` where
``q(y) = sum_i d[i] * (y[i] + sum_{j>i} low[j][i] * y[j])**2``.  Floating point
only decides which branches to visit; callers re-check candidates exactly.
"""
from __future__ import annotations

import math

import numpy as np


class CandidateLimit(RuntimeError):
    pass


def enumerate_candidates(low, d, center, lower, upper, cap, top_lo, top_hi):
    low = np.asarray(low, dtype=float).tolist()
    d = list(map(float, d))
    c = list(map(float, center))
    n = len(d)
    tol = 1e-7 * (1.0 + abs(upper))
    ub = upper + tol
    lb = lower - tol
    x = [0] * n
    xmax = [0] * n
    ctr = [0.0] * n
    partial = [0.0] * (n + 1)
    out: list[tuple[int, ...]] = []

    def setup(level: int) -> None:
        t = 0.0
        for j in range(level + 1, n):
            t += low[j][level] * (x[j] - c[j])
        ctr[level] = c[level] - t
        rem = ub - partial[level + 1]
        r = math.sqrt(rem / d[level]) if rem > 0 else 0.0
        lo = math.ceil(ctr[level] - r)
        hi = math.floor(ctr[level] + r)
        if level == n - 1:
            lo, hi = max(lo, top_lo), min(hi, top_hi)
        x[level], xmax[level] = lo, hi

    level = n - 1
    setup(level)
    while True:
        if x[level] > xmax[level]:
            level += 1
            if level == n:
                break
            x[level] += 1
            continue
        v = x[level] - ctr[level]
        p = partial[level + 1] + d[level] * v * v
        if p > ub:
            x[level] += 1
            continue
        if level == 0:
            if p >= lb:
                out.append(tuple(x))
                if len(out) > cap:
                    raise CandidateLimit(cap)
            x[0] += 1
            continue
        partial[level] = p
        level -= 1
        setup(level)
    if not out:
        return np.zeros((0, n), dtype=np.int64)
    return np.array(out, dtype=np.int64)
