"""
Exceptions raised by the hopfmon library. The command line maps each of them to an exit status.
"""


class GuardExceededError(RuntimeError):
    """An enumeration would exceed the configured size limit."""


class MonoidMismatchError(ValueError):
    """An operation was asked of an element whose monoid does not support it."""


class CoefficientOverflowError(OverflowError):
    """A formal sum coefficient left the representable range."""


class VerificationError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
