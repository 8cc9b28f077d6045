"""Sparse row representation and scalar syndrome checks."""

from dataclasses import dataclass
from typing import Sequence, Tuple, Union

import numpy as np

from ..core.errors import LengthMismatchError, ValidationError
from ..core.matrix import BinaryMatrix

BitVector = Union[str, Sequence[int], np.ndarray]


@dataclass(frozen=True)
class SparseRows:
    """Column indices of the ones of every row, stored back to back.

    Row i owns ``indices[offsets[i]:offsets[i + 1]]``, ascending.
    """
    indices: np.ndarray
    offsets: np.ndarray
    cols: int

    def __post_init__(self):
        self.indices.setflags(write=False)
        self.offsets.setflags(write=False)

    @property
    def rows(self) -> int:
        return len(self.offsets) - 1

    @property
    def energy(self) -> int:
        return len(self.indices)

    def row(self, i: int) -> np.ndarray:
        return self.indices[self.offsets[i]:self.offsets[i + 1]]

    def row_lists(self) -> list[list[int]]:
        return [self.row(i).tolist() for i in range(self.rows)]

    def row_ids(self) -> np.ndarray:
        """Owning row of every entry of ``indices``."""
        return np.repeat(np.arange(self.rows), np.diff(self.offsets))


def sparse_rows(H: BinaryMatrix) -> SparseRows:
    dense = H.to_dense()
    _, columns = np.nonzero(dense)
    offsets = np.zeros(H.rows + 1, dtype=np.int64)
    np.cumsum(dense.sum(axis=1, dtype=np.int64), out=offsets[1:])
    return SparseRows(columns.astype(np.int64), offsets, H.cols)


def reconstruct(rows: SparseRows) -> BinaryMatrix:
    """Dense matrix with ones exactly at the listed positions."""
    dense = np.zeros((rows.rows, rows.cols), dtype=np.uint8)
    dense[rows.row_ids(), rows.indices] = 1
    return BinaryMatrix.from_dense(dense)


def as_bits(y: BitVector, n: int) -> np.ndarray:
    """0/1 uint8 vector of length n from a '0'/'1' string or an integer sequence."""
    if isinstance(y, str):
        if y.strip("01"):
            raise ValidationError(f"Word may only contain '0' and '1': {y!r}")
        bits = np.frombuffer(y.encode("ascii"), dtype=np.uint8) - ord("0")
    else:
        bits = np.asarray(y, dtype=np.uint8)
        if bits.ndim != 1 or np.any(bits > 1):
            raise ValidationError("Word must be a flat vector of 0/1 values")
    if len(bits) != n:
        raise LengthMismatchError(f"Word has length {len(bits)}, expected {n}")
    return bits


def syndrome_lanes(rows: SparseRows, lanes: np.ndarray) -> Tuple[np.ndarray, int]:
    """XOR the lanes named by every row's index list.

    ``lanes`` has length n along axis 0 and any trailing shape; the syndromes have
    m entries along axis 0.

    Returns:
        (syndromes, lanes_combined) where lanes_combined counts the gathered lanes
        folded into the syndromes.
    """
    out = np.zeros((rows.rows,) + lanes.shape[1:], dtype=lanes.dtype)
    if rows.energy == 0:
        return out, 0
    gathered = lanes[rows.indices]
    nonempty = np.flatnonzero(np.diff(rows.offsets))
    out[nonempty] = np.bitwise_xor.reduceat(gathered, rows.offsets[nonempty], axis=0)
    return out, len(gathered)


def check_word(rows: SparseRows, y: BitVector) -> Tuple[bool, np.ndarray]:
    """Syndrome of a single received word.

    Returns:
        (is_codeword, syndrome) with syndrome a uint8 vector of length m.

    Raises:
        LengthMismatchError: y does not have n symbols.
    """
    bits = as_bits(y, rows.cols)
    syndrome, _ = syndrome_lanes(rows, bits)
    return not syndrome.any(), syndrome
