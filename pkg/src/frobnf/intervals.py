"""Exact rational interval arithmetic.

A RealEnclosure is a closed interval [lo, hi] with Fraction endpoints that
is certified to contain some exact real value. Because rational arithmetic
is exact, every operation below returns an interval containing the exact
image of its operands; no rounding direction ever needs care.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class RealEnclosure:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _frac(self.lo))
        object.__setattr__(self, "hi", _frac(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"inverted enclosure [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "RealEnclosure":
        x = _frac(x)
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        x = _frac(x)
        return self.lo <= x <= self.hi

    def strictly_above(self, x) -> bool:
        return self.lo > _frac(x)

    def strictly_below(self, x) -> bool:
        return self.hi < _frac(x)

    def sign(self) -> int | None:
        """Certified sign: +1, -1, 0 for the point [0,0], else None."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def __add__(self, other) -> "RealEnclosure":
        o = _coerce(other)
        return RealEnclosure(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> "RealEnclosure":
        return RealEnclosure(-self.hi, -self.lo)

    def __sub__(self, other) -> "RealEnclosure":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "RealEnclosure":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "RealEnclosure":
        o = _coerce(other)
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return RealEnclosure(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RealEnclosure":
        o = _coerce(other)
        if o.lo <= 0 <= o.hi:
            raise ZeroDivisionError("division by an enclosure containing zero")
        quotients = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return RealEnclosure(min(quotients), max(quotients))

    def __abs__(self) -> "RealEnclosure":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return RealEnclosure(Fraction(0), max(-self.lo, self.hi))

    def pow_int(self, k: int) -> "RealEnclosure":
        """k-th power for k >= 0 (exact monotone case analysis)."""
        if k < 0:
            raise ValueError("negative exponent")
        out = RealEnclosure.point(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def max_with(self, x) -> "RealEnclosure":
        """Enclosure of max(value, x) for a rational x."""
        x = _frac(x)
        return RealEnclosure(max(self.lo, x), max(self.hi, x))

    def intersects(self, other: "RealEnclosure") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __repr__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def _coerce(x) -> RealEnclosure:
    if isinstance(x, RealEnclosure):
        return x
    return RealEnclosure.point(x)


def product(factors: Iterable[RealEnclosure]) -> RealEnclosure:
    out = RealEnclosure.point(1)
    for f in factors:
        out = out * f
    return out


def poly_eval_enclosure(coeffs, x: RealEnclosure) -> RealEnclosure:
    """Horner evaluation of a rational polynomial on an enclosure."""
    acc = RealEnclosure.point(0)
    for c in reversed(coeffs):
        acc = acc * x + RealEnclosure.point(c)
    return acc


def _int_nth_root_floor(n: int, k: int) -> int:
    """Largest r with r**k <= n, for n >= 0, k >= 1 (pure integer Newton)."""
    if n < 0:
        raise ValueError("negative radicand")
    if n in (0, 1) or k == 1:
        return n
    r = 1 << ((n.bit_length() + k - 1) // k)  # certainly >= floor(n^(1/k))
    while True:
        nxt = ((k - 1) * r + n // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r ** k > n:
        r -= 1
    return r


def nth_root(x, k: int, eps) -> RealEnclosure:
    """Enclosure of x**(1/k) of width <= eps, for rational x >= 0, k >= 1.

    Perfect k-th powers of rationals are returned as exact points.
    """
    x = _frac(x)
    eps = _frac(eps)
    if x < 0:
        raise ValueError("negative radicand")
    if k < 1:
        raise ValueError("root index must be positive")
    rn = _int_nth_root_floor(x.numerator, k)
    rd = _int_nth_root_floor(x.denominator, k)
    if rn ** k == x.numerator and rd ** k == x.denominator:
        return RealEnclosure.point(Fraction(rn, rd))
    lo, hi = Fraction(0), max(Fraction(1), x)
    while hi - lo > eps:
        mid = (lo + hi) / 2
        if mid ** k <= x:
            lo = mid
        else:
            hi = mid
    return RealEnclosure(lo, hi)


def sqrt(x, eps) -> RealEnclosure:
    return nth_root(x, 2, eps)
