"""Exact ground truth for small codes."""

from .enumeration import DEFAULT_BUDGET, DualEnumeration
from .minimum import EXHAUSTIVE_MAX_ROWS, OracleResult, exhaustive_min_small, min_weight_basis

__all__ = [
    "DEFAULT_BUDGET",
    "DualEnumeration",
    "EXHAUSTIVE_MAX_ROWS",
    "OracleResult",
    "exhaustive_min_small",
    "min_weight_basis",
]
