"""Exception hierarchy shared by all adequacy modules."""


class AdequacyError(Exception):
    """Base class for all errors raised by this package."""


class NotPrime(AdequacyError):
    """A parameter that must be a prime number is not."""


class CapExceeded(AdequacyError):
    """A configured resource cap (size, enumeration, unknown count) was hit."""


class FieldCapExceeded(CapExceeded):
    """A field (or splitting field) would exceed the element-count cap."""


class OrderCapExceeded(CapExceeded):
    """Group closure grew past the configured order cap."""


class BoxOverflow(CapExceeded):
    """Integer-point enumeration box is larger than the configured cap."""


class IncompatibleDegrees(AdequacyError):
    """Source field does not embed into the target field."""


class ZeroPolynomial(AdequacyError):
    """Operation undefined for the zero polynomial."""


class NotSquare(AdequacyError):
    """Operation requires a square matrix."""


class DimensionMismatch(AdequacyError):
    """Matrix/vector shapes are incompatible."""


class NoSolution(AdequacyError):
    """The linear system is inconsistent."""


class NotInvertible(AdequacyError):
    """A matrix that must be invertible is singular."""


class NotAnEigenvalue(AdequacyError):
    """The given scalar is not a root of the characteristic polynomial."""


class FieldTooSmall(AdequacyError):
    """The characteristic polynomial does not split over the current field."""


class SeedExhausted(AdequacyError):
    """Randomized search ran out of attempts; result is inconclusive."""


class ZeroVector(AdequacyError):
    """Operation requires a nonzero vector."""


class NotSemisimple(AdequacyError):
    """A module expected to be semisimple has no invariant complement."""


class NotNilpotentToOrderL(AdequacyError):
    """X^l != 0, so the truncated exponential series is not defined."""


class NotUnipotentToOrderL(AdequacyError):
    """(u - 1)^l != 0, so the truncated logarithm series is not defined."""


class CriterionMismatch(AdequacyError):
    """Two equivalent criteria disagreed on an irreducible group (a bug)."""


class InternalMismatch(AdequacyError):
    """Two independent computations of the same quantity disagreed (a bug)."""


class SpecParseError(AdequacyError):
    """A group spec file failed to parse or validate."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
