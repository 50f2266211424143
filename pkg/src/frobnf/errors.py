"""Exception hierarchy shared by all frobnf modules."""


class FrobnfError(Exception):
    """Base class for all library errors."""


# --- number field construction ---

class NotMonic(FrobnfError):
    """Defining polynomial is not monic."""


class NotSquarefree(FrobnfError):
    """Defining polynomial has a repeated root (gcd(f, f') not constant)."""


class NotTotallyReal(FrobnfError):
    """Sturm count of real roots is below the degree."""


class BasisNotRing(FrobnfError):
    """Basis products do not reduce to integer combinations of the basis."""


class SingularBasis(FrobnfError):
    """Basis matrix is singular over the rationals."""


class FieldMismatch(FrobnfError):
    """Operands belong to different number fields."""


class NotAnAlgebraicInteger(FrobnfError):
    """Power-basis coordinates are not an integer combination of the basis."""


# --- certified numerics ---

class PrecisionExhausted(FrobnfError):
    """Refinement cap hit before a sign or comparison could be certified."""


class InternalCrossCheckFailure(FrobnfError):
    """Two independent exact computations of the same quantity disagree.

    This is never expected; it indicates a bug in the library itself.
    """


# --- semigroup / enumeration ---

class PreconditionViolated(FrobnfError):
    """A required generator-system certificate is missing or false."""


class NotRepresentable(FrobnfError):
    """The target has no representation over the generators."""


class NotCoprime(FrobnfError):
    """Integer generators do not have gcd 1."""


class WorkLimitExceeded(FrobnfError):
    """An enumeration or search exceeded the configured work limit."""


class BoxTooLarge(FrobnfError):
    """Estimated enumeration work exceeds the configured limit."""


class HypothesisNotEstablished(FrobnfError):
    """A report requires a gap witness and none was found in the search box."""


class ParseError(FrobnfError):
    """Problem file is malformed; message carries the location."""
