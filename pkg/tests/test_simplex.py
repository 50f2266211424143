import itertools
import random
from fractions import Fraction

from frobnf import linalg
from frobnf.simplex import LPStatus, feasible, maximize_coordinate, solve


def test_known_optimum():
    st, v, x = solve([[1, 2]], [4], [1, 1])
    assert st is LPStatus.OPTIMAL and v == 4 and x == [4, 0]


def test_infeasible_and_unbounded():
    st, _, _ = solve([[1, 1], [1, 1]], [1, 2], [0, 0])
    assert st is LPStatus.INFEASIBLE
    st, _, _ = solve([[1, -1]], [1], [1, 0])
    assert st is LPStatus.UNBOUNDED


def test_negative_rhs_is_normalized():
    assert feasible([[-1, -2]], [-4])
    assert not feasible([[1, 2]], [-4])


def test_redundant_rows():
    # duplicated constraint must not break phase 2
    st, v, x = solve([[1, 1], [1, 1]], [3, 3], [2, 1])
    assert st is LPStatus.OPTIMAL and v == 6


def test_exact_rational_pivoting():
    st, v, x = solve([[Fraction(1, 3), Fraction(2, 7)]], [Fraction(5, 2)],
                     [1, 0])
    assert st is LPStatus.OPTIMAL and v == Fraction(15, 2)


def test_maximize_coordinate_boundary_case():
    # unique rational solution (0, 0, 1/2): each coordinate max is forced
    a = [[1, 4, 6], [0, 1, 2]]
    st, v, _ = maximize_coordinate(a, [3, 1], 2)
    assert st is LPStatus.OPTIMAL and v == Fraction(1, 2)
    st, v, _ = maximize_coordinate(a, [3, 1], 0)
    assert st is LPStatus.OPTIMAL and v == 0


def _vertex_feasible(a, b):
    """Independent oracle: a basic feasible solution exists iff the system
    is feasible (Caratheodory over column subsets)."""
    d, n = len(a), len(a[0])
    if all(v == 0 for v in b):
        return True
    for cols in itertools.combinations(range(n), d):
        sub = [[a[i][c] for c in cols] for i in range(d)]
        sol = linalg.solve_fraction(sub, b)
        if sol is not None and all(s >= 0 for s in sol):
            return True
    return None  # inconclusive for rank-deficient systems


def test_feasibility_against_vertex_enumeration():
    rng = random.Random(99)
    checked = 0
    for _ in range(300):
        n = rng.choice([3, 4])
        a = [[rng.randint(-3, 5) for _ in range(n)] for _ in range(2)]
        b = [rng.randint(-4, 8) for _ in range(2)]
        oracle = _vertex_feasible(a, b)
        got = feasible(a, b)
        if oracle is None:
            continue
        checked += 1
        if oracle:
            assert got, (a, b)
        # oracle None/False is inconclusive for rank-deficient a; when the
        # simplex claims feasible, verify a certificate directly
        if got:
            st, _, x = solve(a, b, [0] * n)
            assert st is LPStatus.OPTIMAL
            for row, bi in zip(a, b):
                assert sum(Fraction(r) * xi for r, xi in zip(row, x)) == bi
            assert all(xi >= 0 for xi in x)
    assert checked > 150
