"""Exception types shared across the package."""


class ApolarError(Exception):
    """Base class for every error raised by this package."""


class ParseError(ApolarError):
    """Malformed input text; carries the offending position when known."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class VariableOutOfRangeError(ParseError):
    """A variable index exceeds the declared number of variables."""


class NotPrimeError(ApolarError):
    """The modulus of a requested prime field is composite."""


class FieldMismatchError(ApolarError):
    """Operands belong to different coefficient fields."""


class ArityMismatchError(ApolarError):
    """Operands live in polynomial rings with different variable counts."""


class DegreeMismatchError(ApolarError):
    """A form does not match the degree of the requested basis."""


class DimensionMismatchError(ApolarError):
    """Vector/matrix shapes are incompatible."""


class NonHomogeneousError(ApolarError):
    """A homogeneous form was required."""


class ZeroFormError(ApolarError):
    """The zero form is not a valid input here."""


class DegreeOutOfRangeError(ApolarError):
    """Requested graded piece lies outside the valid degree range."""


class EmptyIdealError(ApolarError):
    """The ideal has no generators."""


class NoRootOfUnityError(ApolarError):
    """The field does not contain a primitive root of unity of this order."""


class DuplicatePointsError(ApolarError):
    """A point configuration must consist of pairwise distinct points."""


class TooFewVariablesError(ApolarError):
    """The construction needs at least two variables."""


class NotMonomialPowersError(ApolarError):
    """Generators are not pure variable powers in distinct variables."""


class AllZeroExponentsError(ApolarError):
    """A monomial needs at least one positive exponent."""


class CertificateFailedError(ApolarError):
    """A rank certificate computation did not confirm the expected value."""


class DivisionByZeroError(ApolarError, ZeroDivisionError):
    """Division or inversion of zero in an exact field."""
