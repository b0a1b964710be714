"""Exception types shared across the toolkit.

Everything here is exact symbolic computation, so failures are structural:
not enough series terms to certify a valuation, a field tower we refuse to
build, a parse error, or an internal invariant that did not hold.
"""


class TorvarError(Exception):
    """Base class for all torvar errors."""


class InsufficientPrecisionError(TorvarError):
    """A truncated-series computation could not be certified.

    ``required_order`` names a truncation order that would (at least) be
    needed; callers typically re-expand and retry.
    """

    def __init__(self, message, required_order=None):
        super().__init__(message)
        self.required_order = required_order


class ZeroDeterminantError(TorvarError):
    """Determinant of a series matrix is zero within the working truncation."""


class UnsupportedFieldError(TorvarError):
    """A coefficient field outside the supported simple-extension towers."""


class ParseError(TorvarError):
    """Presentation text could not be parsed; carries the offending position."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class SingularInputError(TorvarError):
    """Input violates a precondition (zero polynomial, reducible modulus, ...)."""


class InvariantViolation(TorvarError):
    """An internal consistency identity failed; indicates a bug, not bad data."""
