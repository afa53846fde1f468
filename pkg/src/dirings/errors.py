"""Exception types shared across the package."""

from __future__ import annotations

__all__ = [
    "DiringsError",
    "GroupValidationError",
    "NotAssociativeError",
    "NoIdentityAtZeroError",
    "NoInverseError",
    "UnsupportedOrderError",
    "SizeMismatchError",
    "BudgetExceededError",
    "PreconditionError",
    "BijectionFailureError",
    "DefiningIdentityError",
    "NotSkewRingError",
    "NotWeakRingError",
    "NotIdempotentError",
    "InternalCheckError",
    "InputFormatError",
]


class DiringsError(Exception):
    """Base class for all package-specific errors."""


class GroupValidationError(DiringsError):
    """A candidate addition table fails one of the group axioms."""


class NotAssociativeError(GroupValidationError):
    def __init__(self, a: int, b: int, c: int):
        self.witness = (a, b, c)
        super().__init__(f"not associative at (a, b, c) = ({a}, {b}, {c})")


class NoIdentityAtZeroError(GroupValidationError):
    """Element 0 is not a two-sided identity.

    Tables whose identity sits at another index are rejected, not re-indexed.
    """

    def __init__(self, a: int):
        self.witness = a
        super().__init__(f"element 0 is not an identity against a = {a}")


class NoInverseError(GroupValidationError):
    def __init__(self, a: int):
        self.witness = a
        super().__init__(f"element {a} has no inverse")


class UnsupportedOrderError(DiringsError):
    """A standard-group constructor was asked for a degenerate order."""


class SizeMismatchError(DiringsError):
    """Two tables that must share a carrier have different sizes."""


class BudgetExceededError(DiringsError):
    """An exhaustive computation was refused because it exceeds its bound."""


class PreconditionError(DiringsError):
    """A structural precondition of an operation does not hold."""


class BijectionFailureError(DiringsError):
    """A map that must be a bijection between two computed sets is not one."""


class DefiningIdentityError(DiringsError):
    """The pair identity a + (a . b) = a o b fails at a witness cell."""

    def __init__(self, a: int, b: int):
        self.witness = (a, b)
        super().__init__(f"a + a.b != a o b at (a, b) = ({a}, {b})")


class NotSkewRingError(PreconditionError):
    pass


class NotWeakRingError(PreconditionError):
    pass


class NotIdempotentError(PreconditionError):
    pass


class InternalCheckError(DiringsError):
    """A postcondition guaranteed by a verified identity failed; a bug."""


class InputFormatError(DiringsError):
    """An external artifact (JSON file) is malformed."""
