"""Dense univariate polynomials over the rationals.

Coefficients are stored constant-term first as tuples of Fraction, with no
trailing zeros; the zero polynomial is the empty tuple. Everything here is
exact, which is what makes Sturm counts usable as certificates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Poly = tuple[Fraction, ...]


def poly(coeffs: Iterable) -> Poly:
    """Build a normalized polynomial from any iterable of numbers."""
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Poly) -> int:
    """Degree, with the zero polynomial at -1."""
    return len(p) - 1


def is_zero(p: Poly) -> bool:
    return not p


def poly_add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                for i in range(n))


def poly_neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def poly_sub(p: Poly, q: Poly) -> Poly:
    return poly_add(p, poly_neg(q))


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly(out)


def poly_scale(p: Poly, c) -> Poly:
    return poly(a * Fraction(c) for a in p)


def poly_eval(p: Poly, x: Fraction) -> Fraction:
    """Horner evaluation at an exact rational point."""
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_deriv(p: Poly) -> Poly:
    return poly(i * c for i, c in enumerate(p) if i > 0)


def poly_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    """Euclidean division p = q*quot + rem with deg(rem) < deg(q)."""
    if is_zero(q):
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quot = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    lead = q[-1]
    for k in range(len(p) - len(q), -1, -1):
        coeff = rem[k + len(q) - 1] / lead
        quot[k] = coeff
        if coeff:
            for i, b in enumerate(q):
                rem[k + i] -= coeff * b
    return poly(quot), poly(rem)


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd via the Euclidean algorithm."""
    a, b = p, q
    while not is_zero(b):
        _, r = poly_divmod(a, b)
        a, b = b, r
    if is_zero(a):
        return a
    return poly_scale(a, Fraction(1, 1) / a[-1])


def is_squarefree(p: Poly) -> bool:
    return degree(poly_gcd(p, poly_deriv(p))) <= 0


def cauchy_root_bound(p: Poly) -> Fraction:
    """Rational B with every real root of p strictly inside (-B, B)."""
    if degree(p) < 1:
        return Fraction(1)
    lead = abs(p[-1])
    m = max(abs(c) for c in p[:-1]) if len(p) > 1 else Fraction(0)
    return 1 + m / lead


def sturm_chain(p: Poly) -> list[Poly]:
    """Sturm sequence p, p', -rem(...), ... down to a constant."""
    chain = [p, poly_deriv(p)]
    while degree(chain[-1]) > 0:
        _, r = poly_divmod(chain[-2], chain[-1])
        if is_zero(r):
            break
        chain.append(poly_neg(r))
    return chain


def sign_variations(chain: Sequence[Poly], x: Fraction) -> int:
    """Sign changes of the chain at x, zeros skipped."""
    signs = []
    for q in chain:
        v = poly_eval(q, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain: Sequence[Poly], a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots in the half-open interval (a, b].

    Requires a <= b; the leading chain element must not vanish at a or b
    for the classical statement, but skipping zeros keeps the count correct
    whenever chain[0](a) != 0.
    """
    if a > b:
        raise ValueError("empty interval")
    return sign_variations(chain, a) - sign_variations(chain, b)
