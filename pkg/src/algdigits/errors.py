"""Exception types shared by the whole package.

Precondition failures subclass ValueError so they behave naturally for
library users; the CLI maps them to exit code 2.  Resource-cap and
precision failures are RuntimeErrors and map to exit code 3.
"""


class AlgdigitsError(Exception):
    """Base class for every error raised by this package."""


class PolynomialSyntaxError(AlgdigitsError, ValueError):
    """The polynomial text could not be parsed."""


class InvalidPolynomialError(AlgdigitsError, ValueError):
    """The polynomial cannot serve as a minimal polynomial.

    Raised for the zero/constant polynomial, a zero constant term,
    non-primitive coefficients, a squarefree failure, or a polynomial
    that factors over Z.
    """


class UnsupportedBaseError(AlgdigitsError, ValueError):
    """The base is outside the supported classes for this operation."""


class UnitCircleError(UnsupportedBaseError):
    """The base has a conjugate of modulus one, which this operation
    cannot handle (membership of the boundary cases is undecidable by
    the pruning argument used here)."""


class DigitSetError(AlgdigitsError, ValueError):
    """A candidate digit set is not a complete residue system."""


class PrecisionError(AlgdigitsError, RuntimeError):
    """Interval refinement hit its precision cap without resolving a
    comparison."""


class ResourceCapError(AlgdigitsError, RuntimeError):
    """A configured enumeration/state/step cap was exceeded."""
