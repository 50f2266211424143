import math
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from frobnf import linalg

small = st.integers(min_value=-6, max_value=6)


def square(n):
    return st.lists(st.lists(small, min_size=n, max_size=n),
                    min_size=n, max_size=n)


@given(st.one_of(square(2), square(3), square(4)))
def test_bareiss_matches_fraction_gauss(m):
    assert linalg.det_int(m) == linalg.det_fraction(m)


@given(square(3))
def test_solve_fraction(m):
    v = [1, 2, 3]
    x = linalg.solve_fraction(m, v)
    if x is None:
        assert linalg.det_fraction(m) == 0
    else:
        for row, vi in zip(m, v):
            assert sum(Fraction(a) * b for a, b in zip(row, x)) == vi


@given(square(3))
def test_inverse(m):
    inv = linalg.inverse_fraction(m)
    if inv is None:
        assert linalg.det_fraction(m) == 0
    else:
        prod = linalg.mat_mul(m, inv)
        for i in range(3):
            for j in range(3):
                assert prod[i][j] == (1 if i == j else 0)


@settings(max_examples=60)
@given(st.integers(min_value=1, max_value=3), st.integers(min_value=1, max_value=5),
       st.data())
def test_hnf_index_equals_minor_gcd(d, extra, data):
    n = d + extra
    m = data.draw(st.lists(st.lists(small, min_size=n, max_size=n),
                           min_size=d, max_size=d))
    index = linalg.hnf_diagonal_product(m)
    gcd = linalg.minor_gcd(m)
    assert index == gcd


def test_hnf_known_values():
    assert linalg.hnf_diagonal_product([[1, 4, 6], [0, 1, 2]]) == 1
    assert linalg.hnf_diagonal_product([[2, 0], [0, 2]]) == 4
    assert linalg.hnf_diagonal_product([[3, 5]]) == 1
    assert linalg.hnf_diagonal_product([[2, 4]]) == 2
    assert linalg.hnf_diagonal_product([[1, 2], [2, 4]]) == 0  # rank 1
    assert linalg.hnf_diagonal_product([[2, 0, 1], [0, 3, 0]]) == 3


def test_rank():
    assert linalg.rank_fraction([[1, 2], [2, 4]]) == 1
    assert linalg.rank_fraction([[1, 0], [0, 1]]) == 2
    assert linalg.rank_fraction([[0, 0], [0, 0]]) == 0
