"""Exception hierarchy shared by all modules."""


class AlphaStarError(Exception):
    """Base class for errors raised by this package."""


class InputError(AlphaStarError, ValueError):
    """Malformed input: wrong arity, dimension mismatch, bad axis, bad JSON."""


class UnsupportedArityError(InputError):
    """Coboundary requested outside the implemented arity range."""


class ValidationError(AlphaStarError):
    """An object failed a mathematical validity check.

    ``report`` carries the residuals that caused the failure, when available.
    """

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class RangeError(AlphaStarError, ArithmeticError):
    """An exponent left the range where ``exp`` is representable."""
