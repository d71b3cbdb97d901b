"""Exception types shared across the package.

The CLI maps these onto process exit codes (domain error -> 1,
verification failure -> 2, resource guard -> 3).
"""


class DomainError(ValueError):
    """An argument violates a documented precondition."""


class NotSimpleError(DomainError):
    """The characteristic polynomial has a repeated root."""


class ResourceLimitError(RuntimeError):
    """A computation would exceed a hard desk-scale guard."""


class VerificationError(AssertionError):
    """A canned scenario check did not reproduce the expected facts."""
