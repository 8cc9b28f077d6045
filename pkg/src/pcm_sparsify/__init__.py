"""
pcm-sparsify
Minimizes the number of ones in binary parity-check matrices by row additions,
with an exact oracle for small codes and a bit-sliced syndrome checker.
"""

from pcm_sparsify.core import (
    # Errors
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

    # Matrices
    BinaryMatrix,
    RowBasis,
    read_alist,
    save_alist,
    same_code,

    # Configuration
    ConfigManager,
    RunConfig,
)
from pcm_sparsify.search import Schedule, SearchReport, TemperatureSpec, anneal, greedy, run_replicas
from pcm_sparsify.checker import check_batch, check_word, pack_batch, sparse_rows
from pcm_sparsify.oracle import OracleResult, exhaustive_min_small, min_weight_basis

__version__ = "0.1.0"

__all__ = [
    # Errors
    "SparsifyError",
    "MalformedAlistError",
    "DimensionMismatchError",
    "LengthMismatchError",
    "SameRowError",
    "TooFewRowsError",
    "StaleProposalError",
    "RankDeficientInputError",
    "BudgetExceededError",
    "ConfigurationError",
    "ValidationError",

    # Matrices
    "BinaryMatrix",
    "RowBasis",
    "read_alist",
    "save_alist",
    "same_code",

    # Configuration
    "ConfigManager",
    "RunConfig",

    # Search
    "Schedule",
    "SearchReport",
    "TemperatureSpec",
    "anneal",
    "greedy",
    "run_replicas",

    # Checker
    "check_batch",
    "check_word",
    "pack_batch",
    "sparse_rows",

    # Oracle
    "OracleResult",
    "exhaustive_min_small",
    "min_weight_basis",
]
