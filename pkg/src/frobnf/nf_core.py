"""Exact arithmetic in a totally real number field.

A field is presented by a monic squarefree defining polynomial f together
with a basis of the order to work in: column j of the basis matrix holds
the power-basis coordinates of omega_j, with omega_1 = 1. All element
arithmetic happens on integer coordinate vectors over that basis, driven
by a precomputed integer structure tensor, so nothing here ever touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    BasisNotRing,
    FieldMismatch,
    NotAnAlgebraicInteger,
    NotMonic,
    NotSquarefree,
    NotTotallyReal,
    SingularBasis,
)
from . import linalg, polys


class NumberField:
    """A totally real field of degree d with a fixed ring basis.

    Instances are immutable after construction; build them with
    :meth:`from_spec`, which verifies every structural invariant
    (monic, squarefree, totally real by Sturm count, multiplicative
    closure of the basis, nonzero discriminant).
    """

    def __init__(self, defining_poly, basis_columns, structure, basis_traces,
                 discriminant):
        self.defining_poly = defining_poly          # polys.Poly, monic
        self.degree = polys.degree(defining_poly)
        self.basis_columns = basis_columns          # tuple of d coordinate tuples
        self.structure = structure                  # m[i][j][k] ints
        self.basis_traces = basis_traces            # Tr(omega_i) ints
        self.discriminant = discriminant            # nonzero int

    @classmethod
    def from_spec(cls, poly_coeffs, basis) -> "NumberField":
        """Validate a (polynomial, basis) presentation and build the field.

        poly_coeffs lists integer coefficients constant-term first; basis is
        a d x d rational matrix given as columns, column j holding the
        power-basis coordinates of omega_j (so column 0 must be 1, 0, ..., 0).
        """
        f = polys.poly(poly_coeffs)
        d = polys.degree(f)
        if d < 1:
            raise NotMonic("defining polynomial must have degree >= 1")
        if f[-1] != 1:
            raise NotMonic(f"leading coefficient is {f[-1]}, expected 1")
        if any(c.denominator != 1 for c in f):
            raise NotMonic("defining polynomial needs integer coefficients")
        if not polys.is_squarefree(f):
            raise NotSquarefree("gcd(f, f') is not constant")

        chain = polys.sturm_chain(f)
        bound = polys.cauchy_root_bound(f)
        real_roots = polys.count_roots(chain, -bound, bound)
        if real_roots != d:
            raise NotTotallyReal(f"{real_roots} real roots, degree {d}")

        cols = [tuple(Fraction(x) for x in col) for col in basis]
        if len(cols) != d or any(len(c) != d for c in cols):
            raise SingularBasis(f"basis must be {d}x{d}")
        expected_one = tuple(Fraction(int(i == 0)) for i in range(d))
        if cols[0] != expected_one:
            raise SingularBasis("first basis element must be 1")
        w_rows = linalg.transpose([list(c) for c in cols])
        if linalg.det_fraction(w_rows) == 0:
            raise SingularBasis("basis matrix has determinant 0")

        # Multiplicative closure: omega_i * omega_j must be an integer
        # combination of the omegas when reduced modulo f.
        structure = []
        for i in range(d):
            row = []
            for j in range(d):
                prod = polys.poly_mul(polys.poly(cols[i]), polys.poly(cols[j]))
                _, red = polys.poly_divmod(prod, f)
                power = [red[k] if k < len(red) else Fraction(0)
                         for k in range(d)]
                coords = linalg.solve_fraction(w_rows, power)
                if coords is None:
                    raise SingularBasis("basis matrix has determinant 0")
                if any(c.denominator != 1 for c in coords):
                    raise BasisNotRing(
                        f"omega_{i+1} * omega_{j+1} is not integral over the basis")
                row.append(tuple(int(c) for c in coords))
            structure.append(tuple(row))
        structure = tuple(structure)

        # Tr(omega_i) is the trace of multiplication by omega_i.
        basis_traces = tuple(
            sum(structure[i][j][j] for j in range(d)) for i in range(d))
        gram = [[sum(structure[i][j][k] * basis_traces[k] for k in range(d))
                 for j in range(d)] for i in range(d)]
        disc = linalg.det_int(gram)
        if disc == 0:
            raise BasisNotRing("degenerate trace form")

        return cls(f, tuple(cols), structure, basis_traces, disc)

    # Fields compare by their defining data so that equal presentations
    # are interchangeable.
    def __eq__(self, other):
        return (isinstance(other, NumberField)
                and self.defining_poly == other.defining_poly
                and self.basis_columns == other.basis_columns)

    def __hash__(self):
        return hash((self.defining_poly, self.basis_columns))

    def __repr__(self):
        coeffs = [str(c) for c in self.defining_poly]
        return f"NumberField(degree={self.degree}, poly={coeffs})"

    # --- element constructors ---

    def element(self, coords) -> "FieldElement":
        vals = []
        for c in coords:
            if int(c) != c:
                raise ValueError(f"coordinate {c} is not an integer")
            vals.append(int(c))
        if len(vals) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates")
        return FieldElement(self, tuple(vals))

    def zero(self) -> "FieldElement":
        return self.element([0] * self.degree)

    def one(self) -> "FieldElement":
        return self.element([1] + [0] * (self.degree - 1))

    def basis_element(self, j: int) -> "FieldElement":
        """omega_{j+1} as an element (0-indexed j)."""
        return self.element([int(i == j) for i in range(self.degree)])

    def from_integer(self, n: int) -> "FieldElement":
        return self.element([int(n)] + [0] * (self.degree - 1))

    def from_power_coords(self, power_coords) -> "FieldElement":
        """Element from power-basis coordinates, which must be integral
        over the ring basis."""
        vec = [Fraction(x) for x in power_coords]
        if len(vec) != self.degree:
            raise ValueError(f"expected {self.degree} coordinates")
        w_rows = linalg.transpose([list(c) for c in self.basis_columns])
        coords = linalg.solve_fraction(w_rows, vec)
        if coords is None:
            raise SingularBasis("basis matrix has determinant 0")
        if any(c.denominator != 1 for c in coords):
            raise NotAnAlgebraicInteger(
                "power coordinates are not integral over the basis")
        return self.element([int(c) for c in coords])


class FieldElement:
    """An element of the order, held as integer coordinates over the basis."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords: tuple[int, ...]):
        self.field = field
        self.coords = coords

    def power_coords(self) -> list[Fraction]:
        """Coordinates over the power basis 1, theta, ..., theta^(d-1)."""
        d = self.field.degree
        out = [Fraction(0)] * d
        for j, c in enumerate(self.coords):
            if c:
                col = self.field.basis_columns[j]
                for k in range(d):
                    out[k] += c * col[k]
        return out

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _check_same_field(self, other: "FieldElement"):
        if self.field != other.field:
            raise FieldMismatch("elements live in different fields")

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_same_field(other)
        return FieldElement(self.field,
                            tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return FieldElement(self.field, tuple(other * a for a in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._check_same_field(other)
        d = self.field.degree
        m = self.field.structure
        out = [0] * d
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if not b:
                    continue
                ab = a * b
                mij = m[i][j]
                for k in range(d):
                    if mij[k]:
                        out[k] += ab * mij[k]
        return FieldElement(self.field, tuple(out))

    __rmul__ = __mul__

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            return other
        if isinstance(other, int):
            return self.field.from_integer(other)
        return NotImplemented

    def __eq__(self, other):
        return (isinstance(other, FieldElement)
                and self.field == other.field
                and self.coords == other.coords)

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"FieldElement{self.coords}"

    def multiplication_matrix(self) -> list[list[int]]:
        """Integer matrix of multiplication by this element over the basis."""
        d = self.field.degree
        m = self.field.structure
        cols = []
        for j in range(d):
            col = [0] * d
            for i, a in enumerate(self.coords):
                if a:
                    for k in range(d):
                        col[k] += a * m[i][j][k]
            cols.append(col)
        return [[cols[j][k] for j in range(d)] for k in range(d)]

    def trace(self) -> int:
        """Tr_{K/Q}, exactly, via the precomputed basis traces."""
        return sum(c * t for c, t in zip(self.coords, self.field.basis_traces))

    def norm(self) -> int:
        """N_{K/Q}, exactly, as the determinant of the multiplication matrix."""
        return linalg.det_int(self.multiplication_matrix())


def elem_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    """Product of two elements of the same field."""
    return a * b


def trace(a: FieldElement) -> int:
    return a.trace()


def field_from_spec(poly_coeffs, basis) -> NumberField:
    return NumberField.from_spec(poly_coeffs, basis)


def to_integral_coords(field: NumberField, power_coords) -> FieldElement:
    return field.from_power_coords(power_coords)
