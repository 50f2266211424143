"""The inhomogeneous Weil height H_K on vectors of algebraic integers.

For a totally real field all archimedean local degrees are 1, and integral
inputs contribute nothing at the finite places, so

    H_K(a_1, ..., a_n) = prod_i max{1, |sigma_i(a_1)|, ..., |sigma_i(a_n)|}

over the d real embeddings. Heights are produced as certified enclosures,
and threshold comparisons are decided exactly: the product of the per-place
maxima is an algebraic integer of degree at most d!, so either refinement
separates it from a rational threshold or a Liouville-type gap bound proves
exact equality. No comparison is ever guessed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .embeddings import DEFAULT_PRECISION_CAP, embed, sign_at
from .errors import FieldMismatch, PrecisionExhausted
from .intervals import RealEnclosure, nth_root
from .nf_core import FieldElement

DEFAULT_EPS = Fraction(1, 10**30)


class Comparison(Enum):
    BELOW = "below"
    EQUAL = "equal"
    ABOVE = "above"
    AMBIGUOUS = "ambiguous"


@dataclass(frozen=True)
class HeightValue:
    """A certified value of H_K, with the data needed to refine it."""

    enclosure: RealEnclosure
    degree: int
    eps: Fraction
    exact: Fraction | None
    elements: tuple[FieldElement, ...]   # deduplicated support, may be empty

    def refine(self, eps) -> "HeightValue":
        if self.exact is not None:
            return self
        return _height(self.elements, self.degree, Fraction(eps))

    def absolute(self, eps=DEFAULT_EPS) -> RealEnclosure:
        """The absolute height H_K**(1/d)."""
        eps = Fraction(eps)
        lo = nth_root(self.enclosure.lo, self.degree, eps).lo
        hi = nth_root(self.enclosure.hi, self.degree, eps).hi
        return RealEnclosure(lo, hi)


def _dedup_support(elements) -> tuple[FieldElement, ...]:
    """Drop zeros, +-1 and +-duplicates; none of them can move a factor."""
    out: list[FieldElement] = []
    for e in elements:
        if e.is_zero():
            continue
        if e == e.field.one() or e == -e.field.one():
            continue
        if any(e == o or e == -o for o in out):
            continue
        out.append(e)
    return tuple(out)


def _abs_enclosure(e: FieldElement, place: int, eps, cap) -> RealEnclosure:
    return abs(embed(e, place, eps, cap))


def _certify_vs_one(e: FieldElement, place: int, cap) -> bool:
    """True when |sigma_place(e)| > 1; e must not be 0 or +-1, so the
    absolute value cannot equal 1 and refinement decides."""
    eps = Fraction(1, 16)
    for _ in range(cap + 1):
        enc = _abs_enclosure(e, place, eps, cap)
        if enc.strictly_above(1):
            return True
        if enc.strictly_below(1):
            return False
        eps /= 16
    raise PrecisionExhausted(f"|sigma_{place}| vs 1 undecided")


def _abs_greater(a: FieldElement, b: FieldElement, place: int, cap) -> bool:
    """True when |sigma_place(a)| > |sigma_place(b)|; ties are impossible
    for a != +-b."""
    eps = Fraction(1, 16)
    for _ in range(cap + 1):
        ea = _abs_enclosure(a, place, eps, cap)
        eb = _abs_enclosure(b, place, eps, cap)
        if ea.lo > eb.hi:
            return True
        if eb.lo > ea.hi:
            return False
        eps /= 16
    raise PrecisionExhausted(f"|sigma_{place}| comparison undecided")


def _place_profile(elements, d: int, cap) -> list[FieldElement | None]:
    """Per place, the element attaining the maximum when it exceeds 1,
    else None (the factor is exactly 1)."""
    profile: list[FieldElement | None] = []
    for place in range(1, d + 1):
        big = [e for e in elements if _certify_vs_one(e, place, cap)]
        if not big:
            profile.append(None)
            continue
        champ = big[0]
        for e in big[1:]:
            if _abs_greater(e, champ, place, cap):
                champ = e
        profile.append(champ)
    return profile


def _height(elements: tuple[FieldElement, ...], d: int, eps: Fraction,
            cap: int = DEFAULT_PRECISION_CAP) -> HeightValue:
    if not elements:
        return HeightValue(RealEnclosure.point(1), d, eps, Fraction(1), ())
    profile = _place_profile(elements, d, cap)

    champions = {e for e in profile if e is not None}
    exact: Fraction | None = None
    if not champions:
        exact = Fraction(1)
    elif len(champions) == 1 and all(e is not None for e in profile):
        # a single element dominates at every place, so the height is the
        # absolute norm of that element
        exact = Fraction(abs(next(iter(champions)).norm()))
    if exact is not None:
        return HeightValue(RealEnclosure.point(exact), d, eps, exact, elements)

    w = Fraction(1, 16)
    for _ in range(cap + 1):
        enc = RealEnclosure.point(1)
        for place, champ in enumerate(profile, start=1):
            if champ is not None:
                enc = enc * _abs_enclosure(champ, place, w, cap)
        if enc.is_point():
            return HeightValue(enc, d, eps, enc.lo, elements)
        if enc.width <= eps:
            return HeightValue(enc, d, eps, None, elements)
        w /= 16
    raise PrecisionExhausted(f"height width stuck above {eps}")


def height_elem(beta: FieldElement, eps=DEFAULT_EPS,
                cap: int = DEFAULT_PRECISION_CAP) -> HeightValue:
    """H_K(beta) for a single algebraic integer."""
    return _height(_dedup_support([beta]), beta.field.degree, Fraction(eps), cap)


def height_vector(alphas, eps=DEFAULT_EPS,
                  cap: int = DEFAULT_PRECISION_CAP) -> HeightValue:
    """H_K(alpha_1, ..., alpha_n) for a nonempty same-field vector."""
    alphas = list(alphas)
    if not alphas:
        raise ValueError("height of an empty vector")
    field = alphas[0].field
    for a in alphas[1:]:
        if a.field != field:
            raise FieldMismatch("height vector mixes fields")
    return _height(_dedup_support(alphas), field.degree, Fraction(eps), cap)


def compare_height(hv: HeightValue, threshold,
                   cap: int = DEFAULT_PRECISION_CAP) -> Comparison:
    """Certified position of the height against a rational threshold.

    EQUAL is detected exactly: when refinement alone cannot separate, the
    gap bound for the nonzero algebraic integer q*H - p (degree at most d!,
    conjugates bounded by q*H_upper + p) turns a sufficiently thin straddling
    enclosure into a proof of equality.
    """
    tau = Fraction(threshold)
    if tau < 0:
        raise ValueError("threshold must be >= 0")
    if hv.exact is not None:
        if hv.exact < tau:
            return Comparison.BELOW
        if hv.exact > tau:
            return Comparison.ABOVE
        return Comparison.EQUAL

    eps = min(hv.eps, Fraction(1, 16))
    current = hv
    dfact = math.factorial(hv.degree)
    for _ in range(cap + 1):
        enc = current.enclosure
        if enc.strictly_below(tau):
            return Comparison.BELOW
        if enc.strictly_above(tau):
            return Comparison.ABOVE
        # straddling: try the separation bound
        b_conj = tau.denominator * enc.hi + tau.numerator
        sep = Fraction(1) / b_conj ** (dfact - 1) if dfact > 1 else Fraction(1)
        if tau.denominator * enc.width < sep:
            return Comparison.EQUAL
        eps = eps / 2 ** 10
        current = current.refine(eps)
    return Comparison.AMBIGUOUS
