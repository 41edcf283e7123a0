"""Exact rational matrix helpers on lists of Fractions.

Matrices are lists of rows. Nothing here ever rounds.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Matrix = list[list[Fraction]]


def to_fraction_matrix(rows: Sequence[Sequence[object]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence[Fraction]]) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def vecmat(v: Sequence[Fraction], a: Sequence[Sequence[Fraction]]) -> list[Fraction]:
    """Row vector times matrix."""
    out = [Fraction(0)] * len(a[0])
    for coeff, row in zip(v, a):
        if coeff:
            for j, x in enumerate(row):
                out[j] += coeff * x
    return out


def det(a: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    m = [list(map(Fraction, row)) for row in a]
    n = len(m)
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = -result
        p = m[col][col]
        result *= p
        for r in range(col + 1, n):
            f = m[r][col] / p
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return result


def inverse(a: Sequence[Sequence[Fraction]]) -> Matrix:
    n = len(a)
    m = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        m[col], m[pivot] = m[pivot], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def solve_left(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> list[Fraction] | None:
    """Solve ``c @ a == v`` for the row vector ``c``; None if inconsistent.

    ``a`` must have full row rank.
    """
    rows, cols = len(a), len(a[0])
    # Work on the transposed system a^T c^T = v^T.
    m = [[Fraction(a[r][c]) for r in range(rows)] + [Fraction(v[c])] for c in range(cols)]
    pivots: list[int] = []
    r = 0
    for col in range(rows):
        pivot = next((i for i in range(r, cols) if m[i][col] != 0), None)
        if pivot is None:
            raise ValueError("basis rows are linearly dependent")
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        m[r] = [x / p for x in m[r]]
        for i in range(cols):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    if any(m[i][rows] != 0 for i in range(r, cols)):
        return None
    return [m[i][rows] for i in range(rows)]


def nullspace(a: Sequence[Sequence[Fraction]]) -> Matrix:
    """Basis of the right kernel ``{x : a x = 0}`` via reduced row echelon form."""
    m = [list(map(Fraction, row)) for row in a]
    rows, cols = len(m), len(m[0])
    pivot_cols: list[int] = []
    r = 0
    for col in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][col]
        m[r] = [x / p for x in m[r]]
        for i in range(rows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivot_cols.append(col)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivot_cols]
    basis = []
    for fcol in free:
        x = [Fraction(0)] * cols
        x[fcol] = Fraction(1)
        for i, pcol in enumerate(pivot_cols):
            x[pcol] = -m[i][fcol]
        basis.append(x)
    return basis


def ldl(gram: Sequence[Sequence[Fraction]]) -> tuple[Matrix, list[Fraction]]:
    """Exact ``gram = L diag(d) L^T`` with ``L`` unit lower triangular.

    Raises ValueError unless ``gram`` is positive definite.
    """
    n = len(gram)
    low = identity(n)
    d: list[Fraction] = []
    for i in range(n):
        for j in range(i):
            s = Fraction(gram[i][j]) - sum((low[i][k] * low[j][k] * d[k] for k in range(j)), Fraction(0))
            low[i][j] = s / d[j]
        di = Fraction(gram[i][i]) - sum((low[i][k] ** 2 * d[k] for k in range(i)), Fraction(0))
        if di <= 0:
            raise ValueError("Gram matrix is not positive definite")
        d.append(di)
    return low, d


def common_denominator(values) -> int:
    den = 1
    for x in values:
        den = lcm(den, Fraction(x).denominator)
    return den


def primitive_integer_vector(v: Sequence[Fraction]) -> list[int]:
    """Scale a rational vector to the coprime integer vector on the same ray."""
    den = common_denominator(v)
    ints = [int(x * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector")
    return [x // g for x in ints]


def integer_row_basis(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite reduction: a basis of the Z-span of integer ``rows``."""
    m = [list(map(int, row)) for row in rows if any(row)]
    if not m:
        return []
    out: list[list[int]] = []
    for col in range(len(m[0])):
        active = [row for row in m if row[col] != 0]
        rest = [row for row in m if row[col] == 0]
        # Euclid down the column until one row carries it.
        while len(active) > 1:
            active.sort(key=lambda row: abs(row[col]))
            p = active[0]
            survivors = [p]
            for row in active[1:]:
                q = row[col] // p[col]
                row = [x - q * y for x, y in zip(row, p)]
                if row[col] != 0:
                    survivors.append(row)
                elif any(row):
                    rest.append(row)
            active = survivors
        if active:
            p = active[0]
            out.append(p if p[col] > 0 else [-x for x in p])
        m = rest
    return out
