"""Exact linear programming over the rationals.

A textbook two-phase dense simplex with Bland's rule, restricted to the
standard form

    maximize c^T x   subject to   A x = b,  x >= 0,

entirely over Fraction. Bland's rule guarantees termination and makes every
decision deterministic, which the enumeration code relies on for
reproducible output. Problem sizes here are tiny (n rarely above 10), so
clarity wins over sparse cleverness.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction


class LPStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


def _pivot(tableau, basis, row, col):
    piv = tableau[row][col]
    inv = 1 / piv
    tableau[row] = [v * inv for v in tableau[row]]
    prow = tableau[row]
    for i, r in enumerate(tableau):
        if i != row and r[col] != 0:
            f = r[col]
            tableau[i] = [a - f * b for a, b in zip(r, prow)]
    basis[row] = col


def _run_phase(tableau, basis, reduced, allowed_cols):
    """Bland iterations until optimal or unbounded; mutates everything."""
    m = len(tableau)
    while True:
        enter = None
        for j in allowed_cols:
            if reduced[j] > 0:
                enter = j
                break
        if enter is None:
            return LPStatus.OPTIMAL
        leave = None
        best = None
        for i in range(m):
            coeff = tableau[i][enter]
            if coeff > 0:
                ratio = tableau[i][-1] / coeff
                key = (ratio, basis[i])
                if best is None or key < best:
                    best = key
                    leave = i
        if leave is None:
            return LPStatus.UNBOUNDED
        _pivot(tableau, basis, leave, enter)
        f = reduced[enter]
        prow = tableau[leave]
        for j in range(len(reduced)):
            reduced[j] -= f * prow[j]


def solve(a_rows, b, c):
    """Solve max c^T x, A x = b, x >= 0 exactly.

    Returns (status, value, x) where value and the n-vector x are Fractions;
    both are None unless status is OPTIMAL.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else len(c)
    rows = [[Fraction(v) for v in row] for row in a_rows]
    rhs = [Fraction(v) for v in b]
    cost = [Fraction(v) for v in c]
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]

    # phase 1: artificial identity basis, maximize minus their sum
    tableau = [rows[i] + [Fraction(int(i == j)) for j in range(m)] + [rhs[i]]
               for i in range(m)]
    basis = [n + i for i in range(m)]
    width = n + m + 1
    reduced = [Fraction(0)] * width
    for j in range(n):
        reduced[j] = sum(tableau[i][j] for i in range(m))
    reduced[-1] = -sum(rhs)

    _run_phase(tableau, basis, reduced, range(n))
    if any(tableau[i][-1] != 0 for i in range(m) if basis[i] >= n):
        return LPStatus.INFEASIBLE, None, None

    # drive leftover zero-valued artificials out of the basis
    drop = []
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tableau[i][j] != 0), None)
            if col is None:
                drop.append(i)       # redundant constraint
            else:
                _pivot(tableau, basis, i, col)
    for i in sorted(drop, reverse=True):
        del tableau[i]
        del basis[i]
    m = len(tableau)

    # phase 2 on the original objective
    reduced = list(cost) + [Fraction(0)] * (width - n)
    for i in range(m):
        cb = cost[basis[i]] if basis[i] < n else Fraction(0)
        if cb:
            for j in range(width):
                reduced[j] -= cb * tableau[i][j]
    status = _run_phase(tableau, basis, reduced, range(n))
    if status is LPStatus.UNBOUNDED:
        return status, None, None

    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = tableau[i][-1]
    value = sum(ci * xi for ci, xi in zip(cost, x))
    return LPStatus.OPTIMAL, value, x


def feasible(a_rows, b) -> bool:
    """Exact feasibility of {x >= 0 : A x = b}."""
    n = len(a_rows[0]) if a_rows else 0
    status, _, _ = solve(a_rows, b, [Fraction(0)] * n)
    return status is LPStatus.OPTIMAL


def maximize_coordinate(a_rows, b, k):
    """(status, value, x) for max x_k over {x >= 0 : A x = b}."""
    n = len(a_rows[0]) if a_rows else 0
    c = [Fraction(0)] * n
    c[k] = Fraction(1)
    return solve(a_rows, b, c)
