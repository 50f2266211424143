from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from frobnf.intervals import RealEnclosure, nth_root, poly_eval_enclosure, sqrt

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)


@st.composite
def enclosures(draw):
    a = draw(rationals)
    b = draw(rationals)
    return RealEnclosure(min(a, b), max(a, b))


@st.composite
def enclosed_pairs(draw):
    """(enclosure, point inside it)"""
    e = draw(enclosures())
    t = draw(st.fractions(min_value=0, max_value=1, max_denominator=16))
    return e, e.lo + t * (e.hi - e.lo)


@given(enclosed_pairs(), enclosed_pairs())
def test_arithmetic_contains_exact_value(p1, p2):
    (e1, x1), (e2, x2) = p1, p2
    assert (e1 + e2).contains(x1 + x2)
    assert (e1 - e2).contains(x1 - x2)
    assert (e1 * e2).contains(x1 * x2)
    assert abs(e1).contains(abs(x1))
    if not e2.contains(0):
        assert (e1 / e2).contains(x1 / x2)


@given(enclosed_pairs(), st.integers(min_value=0, max_value=5))
def test_pow_contains(p, k):
    e, x = p
    assert e.pow_int(k).contains(x ** k)


def test_inverted_raises():
    with pytest.raises(ValueError):
        RealEnclosure(Fraction(1), Fraction(0))


def test_division_by_zero_straddle():
    with pytest.raises(ZeroDivisionError):
        RealEnclosure(1, 2) / RealEnclosure(-1, 1)


def test_sign():
    assert RealEnclosure(1, 2).sign() == 1
    assert RealEnclosure(-2, -1).sign() == -1
    assert RealEnclosure(0, 0).sign() == 0
    assert RealEnclosure(-1, 1).sign() is None


@given(st.fractions(min_value=0, max_value=1000, max_denominator=100),
       st.integers(min_value=1, max_value=5))
def test_nth_root_encloses(x, k):
    enc = nth_root(x, k, Fraction(1, 10**9))
    assert enc.lo ** k <= x <= enc.hi ** k or enc.is_point()
    if enc.is_point():
        assert enc.lo ** k == x
    assert enc.width <= Fraction(1, 10**9)


def test_perfect_roots_are_points():
    assert sqrt(Fraction(9, 4), Fraction(1, 10)).lo == Fraction(3, 2)
    assert nth_root(Fraction(27), 3, Fraction(1)).lo == 3
    assert nth_root(Fraction(0), 4, Fraction(1)).is_point()


def test_poly_eval_enclosure_contains():
    coeffs = [Fraction(1), Fraction(-4), Fraction(0), Fraction(1)]
    box = RealEnclosure(Fraction(1), Fraction(2))
    enc = poly_eval_enclosure(coeffs, box)
    for x in (Fraction(1), Fraction(3, 2), Fraction(2)):
        v = sum(c * x ** i for i, c in enumerate(coeffs))
        assert enc.contains(v)
