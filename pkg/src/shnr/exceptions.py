"""Exception hierarchy for shnr.

All shnr errors derive from :class:`ShnrError` so callers can catch the
whole family at once.  Each class corresponds to one violated precondition;
messages carry the offending residual or value where that helps debugging.
"""


class ShnrError(Exception):
    """Base class for all shnr errors."""


class NonSquareError(ShnrError):
    """Raised when an operation requires a square matrix."""


class DimensionMismatchError(ShnrError):
    """Raised when operand shapes are incompatible."""


class NotHermitianError(ShnrError):
    """Raised when a matrix deviates from Hermitian beyond tolerance."""


class NotPositiveError(ShnrError):
    """Raised when a matrix has an eigenvalue below the PSD tolerance."""


class ZeroOperatorError(ShnrError):
    """Raised when the inducing operator A is (numerically) zero."""


class NotMemberError(ShnrError):
    """Raised for operators outside the A-adjointable class.

    The defining operator equation ``A X = T* A`` has no admissible
    solution when the range condition fails, so every A-quantity of such
    an operator is undefined and we refuse to compute it.
    """


class AlphaOutOfRangeError(ShnrError):
    """Raised when the alpha seminorm weight lies outside [0, 1]."""


class RankOutOfRangeError(ShnrError):
    """Raised when a requested matrix rank is not in {1, ..., n}."""
