"""pellrec: exact arithmetic for generalized Pell equations x² − dy² = t,
integer linear recurrences, and exhaustive searches for sums of two
recurrence terms landing in the Pell solution coordinate sets.
"""

from .errors import DomainError, NotSimpleError, ResourceLimitError, VerificationError

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "NotSimpleError",
    "ResourceLimitError",
    "VerificationError",
    "__version__",
]
