"""Exact linear algebra over the integers and rationals.

Matrices are plain lists of row lists. Integer determinants use the
fraction-free Bareiss scheme; everything else runs over Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def transpose(m):
    return [list(col) for col in zip(*m)]


def mat_mul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def det_int(m) -> int:
    """Determinant of a square integer matrix (Bareiss, exact)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_fraction(m) -> Fraction:
    """Determinant of a square rational matrix (Gaussian elimination)."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for k in range(n):
        pivot = None
        for i in range(k, n):
            if a[i][k] != 0:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] * inv
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return det


def solve_fraction(m, v):
    """Solve the square rational system m x = v; None if singular."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(y)]
         for row, y in zip(m, v)]
    for k in range(n):
        pivot = None
        for i in range(k, n):
            if a[i][k] != 0:
                pivot = i
                break
        if pivot is None:
            return None
        a[k], a[pivot] = a[pivot], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [row[n] for row in a]


def inverse_fraction(m):
    """Inverse of a square rational matrix; None if singular."""
    n = len(m)
    cols = []
    for j in range(n):
        e = [Fraction(1) if i == j else Fraction(0) for i in range(n)]
        col = solve_fraction(m, e)
        if col is None:
            return None
        cols.append(col)
    return transpose(cols)


def rank_fraction(m) -> int:
    """Rank of a rational matrix."""
    if not m:
        return 0
    a = [[Fraction(x) for x in row] for row in m]
    rows, cols = len(a), len(a[0])
    rank = 0
    row = 0
    for col in range(cols):
        pivot = None
        for i in range(row, rows):
            if a[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        a[row], a[pivot] = a[pivot], a[row]
        inv = 1 / a[row][col]
        for i in range(row + 1, rows):
            if a[i][col] != 0:
                f = a[i][col] * inv
                for j in range(col, cols):
                    a[i][j] -= f * a[row][j]
        rank += 1
        row += 1
        if row == rows:
            break
    return rank


def hnf_diagonal_product(m) -> int:
    """|det| of the left block of the column-style Hermite normal form.

    For a full-rank d x n integer matrix this is the lattice index
    [Z^d : m Z^n]; it equals 1 exactly when m is surjective onto Z^d.
    Returns 0 when the rows are rationally dependent.
    """
    a = [list(map(int, row)) for row in m]
    d = len(a)
    n = len(a[0]) if a else 0
    prod = 1
    for i in range(d):
        # Euclid across columns i..n-1 on row i.
        while True:
            nz = [j for j in range(i, n) if a[i][j] != 0]
            if not nz:
                return 0
            jmin = min(nz, key=lambda j: abs(a[i][j]))
            if jmin != i:
                for r in range(d):
                    a[r][i], a[r][jmin] = a[r][jmin], a[r][i]
            pivot = a[i][i]
            done = True
            for j in range(i + 1, n):
                if a[i][j] != 0:
                    q = a[i][j] // pivot
                    for r in range(d):
                        a[r][j] -= q * a[r][i]
                    if a[i][j] != 0:
                        done = False
            if done:
                break
        prod *= abs(a[i][i])
    return prod


def minor_gcd(m) -> int:
    """gcd of all maximal (d x d) minors of a d x n integer matrix."""
    from itertools import combinations

    d = len(m)
    n = len(m[0]) if m else 0
    g = 0
    for idx in combinations(range(n), d):
        sub = [[m[r][c] for c in idx] for r in range(d)]
        g = gcd(g, abs(det_int(sub)))
        if g == 1:
            return 1
    return g
