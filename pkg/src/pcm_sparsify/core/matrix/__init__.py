"""GF(2) matrices, row spaces and alist I/O."""

from ._binary import (
    WORD_BITS,
    BinaryMatrix,
    RowBasis,
    energy,
    popcount,
    rank,
    require_full_rank,
    row_add,
    row_basis,
    same_code,
    transition_delta,
)
from .alist import (
    AlistDocument,
    from_matrix,
    parse_alist,
    read_alist,
    save_alist,
    to_matrix,
    write_alist,
)

__all__ = [
    "WORD_BITS",
    "BinaryMatrix",
    "RowBasis",
    "energy",
    "popcount",
    "rank",
    "require_full_rank",
    "row_add",
    "row_basis",
    "same_code",
    "transition_delta",
    "AlistDocument",
    "from_matrix",
    "parse_alist",
    "read_alist",
    "save_alist",
    "to_matrix",
    "write_alist",
]
