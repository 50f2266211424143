"""Discriminant-normalized complexity measures of generator tuples.

Both measures reduce to exact integer minor arithmetic on the coordinate
matrix A (column i = coordinates of alpha_i over the ring basis):

    D(alpha)        = sum of squared d x d minors of A = det(A A^T)
    M(alpha, beta)  = max |d x d minor| of the augmented matrix (A b)

The equivalent discriminant formulations (disc of a d-subtuple equals the
field discriminant times the squared minor, and also the determinant of its
trace-form Gram matrix) are computed as redundant cross-checks; the two
exact routes must agree or the library reports an internal failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import FieldMismatch, InternalCrossCheckFailure
from .nf_core import FieldElement
from . import linalg

#: above this many subsets the minor sweep is skipped and det(AA^T) rules
DEFAULT_SUBSET_LIMIT = 20000


@dataclass(frozen=True)
class CoordMatrix:
    """d x n integer coordinate matrix of a generator tuple."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(row[i] for row in self.rows)

    def submatrix(self, cols) -> list[list[int]]:
        return [[row[c] for c in cols] for row in self.rows]

    def augmented(self, b) -> "CoordMatrix":
        return CoordMatrix(tuple(row + (bi,) for row, bi in zip(self.rows, b)))


@dataclass(frozen=True)
class MeasureReport:
    d_value: int
    minors: tuple[int, ...]          # det(A_I) in lexicographic subset order
    m_value: int | None = None


def coord_matrix(alphas) -> CoordMatrix:
    """Coordinate matrix of a tuple of same-field elements."""
    alphas = list(alphas)
    if not alphas:
        raise ValueError("empty generator tuple")
    field = alphas[0].field
    for a in alphas[1:]:
        if a.field != field:
            raise FieldMismatch("generators mix fields")
    d = field.degree
    rows = tuple(tuple(a.coords[j] for a in alphas) for j in range(d))
    return CoordMatrix(rows)


def _trace_gram_det(alphas) -> int:
    gram = [[(a * b).trace() for b in alphas] for a in alphas]
    return linalg.det_int(gram)


def disc_subtuple(alphas) -> int:
    """disc of exactly d elements, computed two independent exact ways."""
    alphas = list(alphas)
    field = alphas[0].field
    d = field.degree
    if len(alphas) != d:
        raise ValueError(f"need exactly {d} elements")
    a = coord_matrix(alphas)
    via_minor = field.discriminant * linalg.det_int(a.submatrix(range(d))) ** 2
    via_trace = _trace_gram_det(alphas)
    if via_minor != via_trace:
        raise InternalCrossCheckFailure(
            f"disc mismatch: {via_minor} (minor route) vs {via_trace} (trace route)")
    return via_minor


def minor_list(a: CoordMatrix) -> tuple[int, ...]:
    """All d x d minors det(A_I), I running lexicographically over J(n, d)."""
    return tuple(linalg.det_int(a.submatrix(idx))
                 for idx in combinations(range(a.n), a.d))


def d_measure(alphas, subset_limit: int = DEFAULT_SUBSET_LIMIT) -> int:
    """D(alpha) as an exact nonnegative integer.

    Primary value is det(A A^T); when the subset count is affordable the
    minor sum and the trace-form discriminant sum are recomputed and must
    agree exactly.
    """
    a = coord_matrix(alphas)
    if a.n < a.d:
        raise ValueError("need at least d generators")
    gram = linalg.mat_mul([list(r) for r in a.rows],
                          linalg.transpose([list(r) for r in a.rows]))
    via_gram = linalg.det_int(gram)

    from math import comb
    if comb(a.n, a.d) <= subset_limit:
        alphas = list(alphas)
        field = alphas[0].field
        minors = minor_list(a)
        via_minors = sum(m * m for m in minors)
        disc_sum = sum(abs(_trace_gram_det([alphas[i] for i in idx]))
                       for idx in combinations(range(a.n), a.d))
        if via_minors != via_gram:
            raise InternalCrossCheckFailure(
                f"Cauchy-Binet mismatch: {via_minors} vs {via_gram}")
        if disc_sum != via_gram * abs(field.discriminant):
            raise InternalCrossCheckFailure(
                f"trace-form mismatch: {disc_sum} vs "
                f"{via_gram} * {abs(field.discriminant)}")
    return via_gram


def m_measure(alphas, beta: FieldElement) -> int:
    """M(alpha, beta) as an exact nonnegative integer: the largest absolute
    d x d minor of the coordinate matrix augmented by beta's coordinates."""
    alphas = list(alphas)
    a = coord_matrix(alphas)
    if a.n < a.d:
        raise ValueError("need at least d generators")
    if beta.field != alphas[0].field:
        raise FieldMismatch("beta lives in a different field")
    aug = a.augmented(beta.coords)
    return max(abs(m) for m in minor_list(aug))


def measure_report(alphas, beta: FieldElement | None = None) -> MeasureReport:
    a = coord_matrix(alphas)
    return MeasureReport(
        d_value=d_measure(alphas),
        minors=minor_list(a),
        m_value=None if beta is None else m_measure(alphas, beta),
    )
