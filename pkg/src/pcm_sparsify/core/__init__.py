"""
Core components: GF(2) matrices, errors and configuration.
"""

from .errors import (
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

from .matrix import (
    BinaryMatrix,
    RowBasis,
    AlistDocument,
    energy,
    rank,
    row_add,
    row_basis,
    same_code,
    transition_delta,
    parse_alist,
    read_alist,
    save_alist,
    write_alist,
)

from .config import (
    ConfigManager,
    GlobalConfig,
    ProfileConfig,
    RunConfig,
    TemperatureSettings,
)

__all__ = [
    # Errors
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

    # Matrices
    'BinaryMatrix',
    'RowBasis',
    'AlistDocument',
    'energy',
    'rank',
    'row_add',
    'row_basis',
    'same_code',
    'transition_delta',
    'parse_alist',
    'read_alist',
    'save_alist',
    'write_alist',

    # Configuration
    'ConfigManager',
    'GlobalConfig',
    'ProfileConfig',
    'RunConfig',
    'TemperatureSettings',
]
