"""Exception hierarchy shared across the package.

Two families matter for the CLI exit-code contract: ``ExpressionError`` and
its subclasses signal malformed user input (exit code 2), everything else
under ``GroupLatError`` signals a data or state problem (exit code 1).
"""

from __future__ import annotations


class GroupLatError(Exception):
    """Base class for all errors raised by this package."""


class ExpressionError(GroupLatError):
    """Malformed operator or class expression text."""


class UnknownName(ExpressionError):
    """A bare name matched neither a predicate nor a catalog entry."""


class UnknownPredicate(ExpressionError):
    """A parameterized class head is not in the predicate vocabulary."""


class NotSubgroup(GroupLatError):
    """The given member set is not closed under the group operation."""


class NotNormal(GroupLatError):
    """A quotient was requested by a subgroup that is not normal."""


class NotPrime(GroupLatError):
    def __init__(self, p: int) -> None:
        super().__init__(f"{p} is not prime")
        self.p = p


class BoundTooLarge(GroupLatError):
    """Requested universe bound exceeds the supported maximum of 64."""


class OrderExceedsBound(GroupLatError):
    """A construction produced a group larger than the universe bound."""


class NotInCatalog(GroupLatError):
    """An operator needed a group the catalog does not contain.

    This is a loud failure by design: silent omission would corrupt
    closure results, so catalog gaps abort the computation instead.
    """


class FormatError(GroupLatError):
    """Catalog file violates the serialization format."""

    def __init__(self, message: str, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class VersionMismatch(FormatError):
    """Catalog file header declares an unsupported format version."""


class UniverseMismatch(GroupLatError):
    """Two classes over different universes were combined."""


class EmptyFormation(GroupLatError):
    """A residual was requested with respect to the empty class."""


class NotAFormation(GroupLatError):
    """A formation-only construction received an unverified class."""


class NotAntisymmetric(GroupLatError):
    """A preorder was used where a partial order is required."""
