"""
Custom exceptions for pcm-sparsify.
"""

class SparsifyError(Exception):
    """Base exception class for pcm-sparsify."""
    pass

class MalformedAlistError(SparsifyError):
    """Raised when an alist stream cannot be parsed into a consistent document."""
    pass

class DimensionMismatchError(SparsifyError, ValueError):
    """Raised when two matrices do not share a column count."""
    pass

class LengthMismatchError(SparsifyError, ValueError):
    """Raised when a word or batch does not match the matrix length n."""
    pass

class SameRowError(SparsifyError, ValueError):
    """Raised when a row would be added to itself."""
    pass

class TooFewRowsError(SparsifyError):
    """Raised when a transition is requested on a matrix with fewer than two rows."""
    pass

class StaleProposalError(SparsifyError, ValueError):
    """Raised when a proposal's delta no longer matches the matrix."""
    pass

class RankDeficientInputError(SparsifyError):
    """Raised when a matrix does not have full row rank."""
    pass

class BudgetExceededError(SparsifyError):
    """Raised when an oracle input exceeds the enumeration budget."""
    pass

class ConfigurationError(SparsifyError):
    """Raised when there is a configuration error."""
    pass

class ValidationError(SparsifyError):
    """Raised when validation fails."""
    pass
