"""
Exception hierarchy shared by every bezout sub-package.

The CLI maps these onto its exit-code contract (see bezout.cli.errors).
"""


class BezoutError(Exception):
    """Base class for all library errors."""
    pass


class DescriptorMismatchError(BezoutError):
    """Raised when an operation mixes elements of different rings."""
    pass


class NotDivisibleError(BezoutError):
    """Raised by exact division when no quotient exists in the ring."""
    pass


class DivisionByZeroError(BezoutError):
    """Raised when dividing by the zero element."""
    pass


class NotAUnitError(BezoutError):
    """Raised when an inverse is requested for a non-unit."""
    pass


class NotComaximalError(BezoutError):
    """Raised when elements were expected to generate the unit ideal."""
    pass


class UnsupportedRingError(BezoutError):
    """Raised when an operation is not defined for a ring instance."""
    pass


class IndexOutOfRangeError(BezoutError):
    """Raised when an elementary operation addresses a missing row or column."""
    pass


class BudgetExceededError(BezoutError):
    """Raised when an exhaustive check would exceed its configured budget."""
    pass


class PreconditionError(BezoutError):
    """Raised when the inputs of an operation violate its precondition."""
    pass


class ParseError(BezoutError):
    """Raised when text or JSON input cannot be decoded."""
    pass


class VerificationError(BezoutError):
    """Raised when an internal exact re-check fails. Always a bug."""
    pass
