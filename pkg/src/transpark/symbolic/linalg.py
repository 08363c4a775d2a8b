"""Exact linear algebra over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _integer_row(row) -> list[int]:
    den = 1
    for x in row:
        den = lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in row]


def rank(rows) -> int:
    """Rank of a rational matrix via fraction-free row reduction."""
    work = [r for r in (_integer_row(row) for row in rows) if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rk = 0
    for c in range(ncols):
        pivot = next((i for i in range(rk, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[rk], work[pivot] = work[pivot], work[rk]
        p = work[rk]
        for i in range(rk + 1, len(work)):
            a = work[i][c]
            if a:
                row = [p[c] * x - a * y for x, y in zip(work[i], p)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                work[i] = [x // g for x in row] if g > 1 else row
        rk += 1
        if rk == len(work):
            break
    return rk


def rref(rows) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                a = m[i][c]
                m[i] = [x - a * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def nullspace(rows, ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : rows @ x = 0}``, one vector per free column."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def det(matrix) -> Fraction:
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        result *= m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                a = m[i][c] / m[c][c]
                m[i] = [x - a * y for x, y in zip(m[i], m[c])]
    return sign * result
