"""Exception hierarchy shared across the package."""


class AperyError(Exception):
    """Base class for all library errors."""


class EmptyInput(AperyError):
    """No generators were supplied."""


class GcdNotOne(AperyError):
    """The generators do not generate a numerical semigroup (gcd != 1)."""


class NotInSemigroup(AperyError):
    """A value queried for order/representations is not a semigroup element."""


class DegreeOutOfRange(AperyError):
    """A graded map was requested outside the algebra's degree range."""


class NotApplicable(AperyError):
    """The requested structural construction does not apply to this input."""


class NotCI(AperyError):
    """A complete-intersection-only operation was called on a non-CI algebra."""


class NotGorenstein(AperyError):
    """A Gorenstein-only operation was called on a non-Gorenstein algebra."""


class NotGorensteinAtStep(AperyError):
    """A quotient-chain step reached a non-Gorenstein intermediate algebra."""


class DependentBasis(AperyError):
    """Monomials passed as a basis are linearly dependent in the quotient."""


class SizeLimit(AperyError):
    """An exact computation exceeded its configured size cap."""


class NotSquare(AperyError):
    """A determinant was requested for a non-square matrix."""


class DegreeTooSmall(AperyError):
    """The degree-based criterion needs all generator degrees >= 2."""


class PolyParseError(AperyError):
    """The polynomial text did not match the expected grammar."""
