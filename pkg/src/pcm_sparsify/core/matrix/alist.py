"""Reading and writing parity-check matrices in MacKay's alist format.

Layout::

    n m
    max_col_degree max_row_degree
    <n column degrees>
    <m row degrees>
    <n lines: 1-based row indices of each column>
    <m lines: 1-based column indices of each row>

Input is read as a whitespace-separated integer stream. Index lists may be
zero-padded to the declared maximum degree; output is always unpadded, with
ascending indices, single spaces and LF line endings.
"""

from itertools import product
from pathlib import Path
from typing import List, Union
import logging

import numpy as np
from pydantic import BaseModel, Field, model_validator
from pydantic import ValidationError as PydanticValidationError

from ..errors import MalformedAlistError
from ._binary import BinaryMatrix

logger = logging.getLogger(__name__)


class AlistDocument(BaseModel):
    """Sparse description of a binary matrix as stored in an alist file."""
    n: int = Field(ge=1, description="Number of columns")
    m: int = Field(ge=1, description="Number of rows")
    max_col_degree: int = Field(ge=0, description="Largest column weight")
    max_row_degree: int = Field(ge=0, description="Largest row weight")
    col_degrees: List[int] = Field(description="Weight of every column")
    row_degrees: List[int] = Field(description="Weight of every row")
    col_indices: List[List[int]] = Field(description="1-based row positions of the ones in each column")
    row_indices: List[List[int]] = Field(description="1-based column positions of the ones in each row")

    @model_validator(mode="after")
    def _check_consistency(self) -> "AlistDocument":
        if len(self.col_degrees) != self.n or len(self.col_indices) != self.n:
            raise ValueError(f"Expected {self.n} column entries")
        if len(self.row_degrees) != self.m or len(self.row_indices) != self.m:
            raise ValueError(f"Expected {self.m} row entries")
        if self.max_col_degree != max(self.col_degrees):
            raise ValueError("max_col_degree does not match the column degrees")
        if self.max_row_degree != max(self.row_degrees):
            raise ValueError("max_row_degree does not match the row degrees")
        if sum(self.col_degrees) != sum(self.row_degrees):
            raise ValueError("Column and row degrees disagree on the number of ones")

        column_pairs = set()
        for col, (degree, indices) in enumerate(zip(self.col_degrees, self.col_indices)):
            _check_index_list(indices, degree, self.m, f"column {col + 1}")
            column_pairs.update((row, col + 1) for row in indices)
        row_pairs = set()
        for row, (degree, indices) in enumerate(zip(self.row_degrees, self.row_indices)):
            _check_index_list(indices, degree, self.n, f"row {row + 1}")
            row_pairs.update((row + 1, col) for col in indices)
        if column_pairs != row_pairs:
            raise ValueError("Row and column adjacency describe different matrices")
        return self

    @property
    def ones(self) -> int:
        return sum(self.row_degrees)

    def dumps(self) -> bytes:
        """Canonical alist text."""
        lines = [
            f"{self.n} {self.m}",
            f"{self.max_col_degree} {self.max_row_degree}",
            " ".join(str(d) for d in self.col_degrees),
            " ".join(str(d) for d in self.row_degrees),
        ]
        lines.extend(" ".join(str(i) for i in sorted(indices)) for indices in self.col_indices)
        lines.extend(" ".join(str(i) for i in sorted(indices)) for indices in self.row_indices)
        return ("\n".join(lines) + "\n").encode("ascii")


def _check_index_list(indices: List[int], degree: int, upper: int, label: str) -> None:
    if len(indices) != degree:
        raise ValueError(f"{label} lists {len(indices)} indices but declares degree {degree}")
    if len(set(indices)) != len(indices):
        raise ValueError(f"{label} repeats an index")
    if any(i < 1 or i > upper for i in indices):
        raise ValueError(f"{label} has an index outside [1, {upper}]")


def _take_lists(tokens: List[int], pos: int, degrees: List[int], width: int, padded: bool, label: str):
    lists = []
    for k, degree in enumerate(degrees):
        span = width if padded else degree
        chunk = tokens[pos:pos + span]
        pos += span
        entries = [t for t in chunk if t != 0]
        if not padded and len(entries) != len(chunk):
            raise MalformedAlistError(f"Zero index in unpadded {label} {k + 1}")
        if len(entries) != degree:
            raise MalformedAlistError(
                f"{label.capitalize()} {k + 1} has {len(entries)} indices, expected {degree}"
            )
        lists.append(sorted(entries))
    return lists, pos


def parse_alist(text: Union[bytes, str]) -> AlistDocument:
    """Parse an alist stream.

    Args:
        text: Raw file contents. Any non-ASCII byte is rejected.

    Returns:
        A cross-consistent AlistDocument with ascending index lists.

    Raises:
        MalformedAlistError: On bad tokens, counts, indices or inconsistent adjacency.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as e:
            raise MalformedAlistError(f"Non-ASCII byte at offset {e.start}") from e
    elif not text.isascii():
        raise MalformedAlistError("Non-ASCII character in alist text")

    try:
        tokens = [int(token) for token in text.split()]
    except ValueError as e:
        raise MalformedAlistError(f"Non-integer token: {e}") from e

    if len(tokens) < 4:
        raise MalformedAlistError("Alist header needs at least four integers")
    n, m, max_col, max_row = tokens[:4]
    if n < 1 or m < 1 or max_col < 0 or max_row < 0:
        raise MalformedAlistError(f"Invalid header values n={n} m={m} degrees=({max_col}, {max_row})")
    pos = 4
    if len(tokens) < pos + n + m:
        raise MalformedAlistError("Stream ends inside the degree lists")
    col_degrees = tokens[pos:pos + n]
    row_degrees = tokens[pos + n:pos + n + m]
    pos += n + m
    if any(d < 0 or d > max_col for d in col_degrees) or any(d < 0 or d > max_row for d in row_degrees):
        raise MalformedAlistError("Degree outside [0, declared maximum]")

    remaining = len(tokens) - pos
    layouts = [
        (cols_padded, rows_padded)
        for cols_padded, rows_padded in product((False, True), repeat=2)
        if (n * max_col if cols_padded else sum(col_degrees))
        + (m * max_row if rows_padded else sum(row_degrees)) == remaining
    ]
    if not layouts:
        raise MalformedAlistError(f"Wrong token count: {remaining} index tokens match no layout")

    # Counts can coincide for different paddings; the first layout that reads cleanly wins.
    error = None
    for cols_padded, rows_padded in layouts:
        try:
            col_indices, after_cols = _take_lists(tokens, pos, col_degrees, max_col, cols_padded, "column")
            row_indices, _ = _take_lists(tokens, after_cols, row_degrees, max_row, rows_padded, "row")
        except MalformedAlistError as e:
            error = e
            continue
        logger.debug("alist layout: columns padded=%s, rows padded=%s", cols_padded, rows_padded)
        break
    else:
        raise error

    try:
        return AlistDocument(
            n=n,
            m=m,
            max_col_degree=max_col,
            max_row_degree=max_row,
            col_degrees=col_degrees,
            row_degrees=row_degrees,
            col_indices=col_indices,
            row_indices=row_indices,
        )
    except PydanticValidationError as e:
        raise MalformedAlistError(str(e)) from e


def to_matrix(doc: AlistDocument) -> BinaryMatrix:
    """Convert a document to a packed matrix."""
    dense = np.zeros((doc.m, doc.n), dtype=np.uint8)
    for row, indices in enumerate(doc.row_indices):
        if indices:
            dense[row, np.asarray(indices) - 1] = 1
    return BinaryMatrix.from_dense(dense)


def from_matrix(H: BinaryMatrix) -> AlistDocument:
    dense = H.to_dense()
    row_indices = [[int(c) + 1 for c in np.flatnonzero(row)] for row in dense]
    col_indices = [[int(r) + 1 for r in np.flatnonzero(col)] for col in dense.T]
    col_degrees = [len(c) for c in col_indices]
    row_degrees = [len(r) for r in row_indices]
    return AlistDocument(
        n=H.cols,
        m=H.rows,
        max_col_degree=max(col_degrees),
        max_row_degree=max(row_degrees),
        col_degrees=col_degrees,
        row_degrees=row_degrees,
        col_indices=col_indices,
        row_indices=row_indices,
    )


def write_alist(H: BinaryMatrix) -> bytes:
    return from_matrix(H).dumps()


def read_alist(path: Union[str, Path]) -> BinaryMatrix:
    """Load a matrix from an alist file."""
    return to_matrix(parse_alist(Path(path).read_bytes()))


def save_alist(H: BinaryMatrix, path: Union[str, Path]) -> None:
    Path(path).write_bytes(write_alist(H))
