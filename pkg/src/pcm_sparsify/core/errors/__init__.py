"""
Error types for the pcm-sparsify system.
"""

from .base import (
    SparsifyError,
    MalformedAlistError,
    DimensionMismatchError,
    LengthMismatchError,
    SameRowError,
    TooFewRowsError,
    StaleProposalError,
    RankDeficientInputError,
    BudgetExceededError,
    ConfigurationError,
    ValidationError,
)

__all__ = [
    'SparsifyError',
    'MalformedAlistError',
    'DimensionMismatchError',
    'LengthMismatchError',
    'SameRowError',
    'TooFewRowsError',
    'StaleProposalError',
    'RankDeficientInputError',
    'BudgetExceededError',
    'ConfigurationError',
    'ValidationError',
]
