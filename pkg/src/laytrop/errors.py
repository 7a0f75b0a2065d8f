"""Exception taxonomy shared by all laytrop modules.

The CLI maps these onto stable exit codes: ParseError -> 2,
DomainError (and subclasses) -> 3, PreconditionViolated -> 4.
"""


class LaytropError(Exception):
    """Base class for every error raised by this package."""


class ParseError(LaytropError):
    """Malformed text input; carries the offset where scanning failed."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class DomainError(LaytropError):
    """An operation was applied to values outside its domain."""


class InvalidLayer(DomainError):
    """A layer is not an element of the active sorting semiring."""


class NonInvertibleLayer(DomainError):
    """The layer has no multiplicative inverse in the active sort."""


class LayerNotDivisible(DomainError):
    """A required layer quotient does not exist in the active sort."""


class NotSquare(DomainError):
    """Permanent requested for a non-square matrix."""


class DegreeZero(DomainError):
    """A Sylvester matrix needs both degrees to be at least 1."""


class OutOfRange(DomainError):
    """Index argument outside the allowed range."""


class ArityMismatch(DomainError):
    """Point arity differs from the polynomial arity."""


class NotMonic(DomainError):
    """Operation requires a monic polynomial (leading value 0)."""


class NotPrimary(DomainError):
    """Operation requires a primary polynomial."""


class NotPrimaryPair(DomainError):
    """Operation requires two primary polynomials with the same root."""


class NotSeparable(DomainError):
    """Polynomial has a repeated corner root (or is not in shape)."""


class NotFullForm(DomainError):
    """Operation requires a polynomial flagged as full form."""


class PreconditionViolated(LaytropError):
    """A documented precondition of the operation does not hold."""
