"""Certified real embeddings via Sturm root isolation.

The d real roots of the defining polynomial are isolated into disjoint
rational intervals, sorted increasingly; place i evaluates elements at the
i-th root. Every sign decision refines intervals until it is certain, so
nothing reported here is ever a guess.
"""

from __future__ import annotations

import weakref
from fractions import Fraction

from .errors import PrecisionExhausted
from .intervals import RealEnclosure, poly_eval_enclosure
from .nf_core import FieldElement, NumberField
from . import polys

#: default number of interval halvings before giving up on a sign
DEFAULT_PRECISION_CAP = 256

_root_cache: "weakref.WeakKeyDictionary[NumberField, RootSystem]" = \
    weakref.WeakKeyDictionary()


class RootSystem:
    """Disjoint isolating intervals for the real roots of a field polynomial.

    Interval i defines the embedding sigma_{i+1}; intervals only ever shrink,
    so cached refinements stay valid for every later query.
    """

    def __init__(self, field: NumberField):
        self.field = field
        self._chain = polys.sturm_chain(field.defining_poly)
        self._intervals = self._isolate()

    def _isolate(self) -> list[list[Fraction]]:
        bound = polys.cauchy_root_bound(self.field.defining_poly)
        pending = [(-bound, bound)]
        found: list[list[Fraction]] = []
        while pending:
            a, b = pending.pop()
            count = polys.count_roots(self._chain, a, b)
            if count == 0:
                continue
            if count == 1:
                found.append([a, b])
                continue
            mid = self._split_point(a, b)
            pending.append((a, mid))
            pending.append((mid, b))
        found.sort(key=lambda iv: iv[0])
        assert len(found) == self.field.degree
        return found

    def _split_point(self, a: Fraction, b: Fraction) -> Fraction:
        """An interior point that is not a root, so endpoints stay root-free
        and every isolating interval keeps its root strictly inside."""
        f = self.field.defining_poly
        k = 2
        while True:
            x = a + (b - a) / k
            if polys.poly_eval(f, x) != 0:
                return x
            k += 1

    def interval(self, place: int) -> RealEnclosure:
        lo, hi = self._intervals[place]
        return RealEnclosure(lo, hi)

    def refine(self, place: int) -> RealEnclosure:
        """Halve the isolating interval of one root (sign bisection)."""
        lo, hi = self._intervals[place]
        if lo == hi:
            return RealEnclosure(lo, hi)
        f = self.field.defining_poly
        mid = (lo + hi) / 2
        fmid = polys.poly_eval(f, mid)
        if fmid == 0:
            self._intervals[place] = [mid, mid]
        elif (polys.poly_eval(f, lo) > 0) == (fmid > 0):
            self._intervals[place] = [mid, hi]
        else:
            self._intervals[place] = [lo, mid]
        lo, hi = self._intervals[place]
        return RealEnclosure(lo, hi)

    def refine_to(self, place: int, width: Fraction,
                  cap: int = DEFAULT_PRECISION_CAP) -> RealEnclosure:
        iv = self.interval(place)
        rounds = 0
        while iv.width > width:
            if rounds >= cap:
                raise PrecisionExhausted(
                    f"root interval at place {place + 1} stuck above width {width}")
            iv = self.refine(place)
            rounds += 1
        return iv


def isolate_roots(field: NumberField) -> RootSystem:
    """The cached root system of a field (isolation runs once per field)."""
    rs = _root_cache.get(field)
    if rs is None:
        rs = RootSystem(field)
        _root_cache[field] = rs
    return rs


def embed(a: FieldElement, place: int, eps,
          cap: int = DEFAULT_PRECISION_CAP) -> RealEnclosure:
    """Enclosure of sigma_place(a) of width <= eps (place is 1-based)."""
    eps = Fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    d = a.field.degree
    if not 1 <= place <= d:
        raise ValueError(f"place must be in 1..{d}")
    rs = isolate_roots(a.field)
    coeffs = a.power_coords()
    idx = place - 1
    iv = rs.interval(idx)
    rounds = 0
    while True:
        enc = poly_eval_enclosure(coeffs, iv)
        if enc.width <= eps:
            return enc
        if rounds >= cap:
            raise PrecisionExhausted(f"embedding width stuck above {eps}")
        iv = rs.refine(idx)
        rounds += 1


def sign_at(a: FieldElement, place: int,
            cap: int = DEFAULT_PRECISION_CAP) -> int:
    """Certified sign of sigma_place(a): -1, 0 or +1.

    Zero happens exactly when a = 0, because each embedding is an injective
    ring map; for nonzero a the refinement below must terminate.
    """
    if a.is_zero():
        return 0
    rs = isolate_roots(a.field)
    coeffs = a.power_coords()
    idx = place - 1
    iv = rs.interval(idx)
    for _ in range(cap + 1):
        enc = poly_eval_enclosure(coeffs, iv)
        s = enc.sign()
        if s is not None and s != 0:
            return s
        iv = rs.refine(idx)
    raise PrecisionExhausted(
        f"sign of a nonzero element undecided at place {place} after {cap} rounds")


def certify_total_nonneg(a: FieldElement,
                         cap: int = DEFAULT_PRECISION_CAP) -> bool:
    """True exactly when every real embedding of a is >= 0."""
    if a.is_zero():
        return True
    return all(sign_at(a, i, cap) >= 0 for i in range(1, a.field.degree + 1))


def embedding_enclosures(a: FieldElement, eps,
                         cap: int = DEFAULT_PRECISION_CAP) -> list[RealEnclosure]:
    """Enclosures of all d embeddings, each of width <= eps."""
    return [embed(a, i, eps, cap) for i in range(1, a.field.degree + 1)]
