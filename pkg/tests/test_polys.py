from fractions import Fraction

from hypothesis import given, strategies as st

from frobnf import polys


def P(*coeffs):
    return polys.poly(coeffs)


def test_normalization_and_degree():
    assert polys.poly([1, 2, 0, 0]) == (Fraction(1), Fraction(2))
    assert polys.degree(P()) == -1
    assert polys.degree(P(5)) == 0
    assert polys.degree(P(-2, 0, 1)) == 2


def test_divmod_reconstructs():
    p = P(1, -4, 0, 1)
    q = P(-1, 1)
    quot, rem = polys.poly_divmod(p, q)
    assert polys.poly_add(polys.poly_mul(quot, q), rem) == p
    assert polys.degree(rem) < polys.degree(q)


def test_gcd_and_squarefree():
    # (x-1)^2 (x+2) is not squarefree
    sq = polys.poly_mul(polys.poly_mul(P(-1, 1), P(-1, 1)), P(2, 1))
    assert not polys.is_squarefree(sq)
    assert polys.is_squarefree(P(-2, 0, 1))
    g = polys.poly_gcd(sq, polys.poly_deriv(sq))
    assert polys.degree(g) == 1 and polys.poly_eval(g, Fraction(1)) == 0


def test_sturm_counts():
    f = P(-2, 0, 1)
    chain = polys.sturm_chain(f)
    assert polys.count_roots(chain, Fraction(-3), Fraction(3)) == 2
    assert polys.count_roots(chain, Fraction(0), Fraction(3)) == 1
    assert polys.count_roots(chain, Fraction(2), Fraction(3)) == 0
    cubic = P(1, -4, 0, 1)
    chain3 = polys.sturm_chain(cubic)
    b = polys.cauchy_root_bound(cubic)
    assert polys.count_roots(chain3, -b, b) == 3
    # sign inspection at a few integers brackets all three roots
    assert polys.count_roots(chain3, Fraction(-3), Fraction(-2)) == 1
    assert polys.count_roots(chain3, Fraction(0), Fraction(1)) == 1
    assert polys.count_roots(chain3, Fraction(1), Fraction(2)) == 1


def test_no_real_roots():
    chain = polys.sturm_chain(P(1, 0, 1))
    b = polys.cauchy_root_bound(P(1, 0, 1))
    assert polys.count_roots(chain, -b, b) == 0


small_ints = st.integers(min_value=-8, max_value=8)


@given(st.lists(small_ints, min_size=1, max_size=5),
       st.lists(small_ints, min_size=1, max_size=5),
       small_ints)
def test_mul_evaluates_pointwise(a, b, x):
    pa, pb = polys.poly(a), polys.poly(b)
    x = Fraction(x)
    assert (polys.poly_eval(polys.poly_mul(pa, pb), x)
            == polys.poly_eval(pa, x) * polys.poly_eval(pb, x))


@given(st.lists(small_ints, min_size=2, max_size=6))
def test_cauchy_bound_has_no_roots_outside(coeffs):
    p = polys.poly(coeffs)
    if polys.degree(p) < 1:
        return
    chain = polys.sturm_chain(p)
    b = polys.cauchy_root_bound(p)
    total = polys.count_roots(chain, -b, b)
    wide = polys.count_roots(chain, -2 * b, 2 * b)
    assert total == wide
