"""Bit-packed GF(2) matrices and row-space algebra."""

from typing import Dict, Iterable, List, Optional, Sequence
import logging

import numpy as np

from ..errors import DimensionMismatchError, RankDeficientInputError, SameRowError

logger = logging.getLogger(__name__)

WORD_BITS = 64


def words_for(n: int) -> int:
    """Number of 64-bit words needed to hold n bits."""
    return max(1, -(-n // WORD_BITS))


def tail_mask(n: int) -> np.uint64:
    """Mask of the valid bits in the last word of an n-bit row."""
    used = n % WORD_BITS
    if used == 0:
        return np.uint64(0xFFFFFFFFFFFFFFFF)
    return np.uint64((1 << used) - 1)


def popcount(words: np.ndarray) -> int:
    """Total number of one bits in an array of packed words."""
    return int(np.bitwise_count(words).sum(dtype=np.int64))


class BinaryMatrix:
    """An m x n matrix over GF(2) stored as rows of packed 64-bit words.

    Column j of a row lives in word j // 64 at bit j % 64. Bits beyond n are
    always zero, so popcounts over whole words count exactly the logical ones.
    Row weights and the total energy are cached and updated by ``row_add``.
    """

    def __init__(self, words: np.ndarray, cols: int):
        """Wrap an existing word array.

        Args:
            words: Array of shape (m, ceil(n / 64)) with dtype uint64.
            cols: Logical column count n.
        """
        words = np.ascontiguousarray(words, dtype=np.uint64)
        if words.ndim != 2:
            raise DimensionMismatchError(f"Expected a 2-d word array, got {words.ndim} dimensions")
        rows = words.shape[0]
        if cols < 1 or rows < 1 or rows > cols:
            raise DimensionMismatchError(f"Matrix shape must satisfy 1 <= m <= n, got {rows}x{cols}")
        if words.shape[1] != words_for(cols):
            raise DimensionMismatchError(
                f"{cols} columns need {words_for(cols)} words per row, got {words.shape[1]}"
            )
        if np.any(words[:, -1] & ~tail_mask(cols)):
            raise DimensionMismatchError("Padding bits beyond the last column must be zero")

        self._words = words
        self._cols = cols
        self._weights = np.bitwise_count(words).sum(axis=1, dtype=np.int64)
        self._energy = int(self._weights.sum())

    # Construction

    @classmethod
    def from_dense(cls, array: Sequence[Sequence[int]] | np.ndarray) -> "BinaryMatrix":
        """Build from a dense 0/1 array of shape (m, n)."""
        dense = np.asarray(array)
        if dense.ndim != 2:
            raise DimensionMismatchError(f"Expected a 2-d array, got {dense.ndim} dimensions")
        if dense.size and not np.isin(dense, (0, 1)).all():
            raise ValueError("Dense matrix entries must be 0 or 1")
        rows, cols = dense.shape
        packed = np.packbits(dense.astype(np.uint8), axis=1, bitorder="little")
        padded = np.zeros((rows, words_for(cols) * 8), dtype=np.uint8)
        padded[:, : packed.shape[1]] = packed
        return cls(padded.view("<u8").astype(np.uint64), cols)

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "BinaryMatrix":
        """Build from rows written as '0'/'1' strings, column 0 first."""
        return cls.from_dense([[int(ch) for ch in row] for row in rows])

    @classmethod
    def from_row_ints(cls, rows: Sequence[int], cols: int) -> "BinaryMatrix":
        """Build from rows given as Python ints with bit j holding column j."""
        width = words_for(cols) * 8
        buffer = b"".join(int(row).to_bytes(width, "little") for row in rows)
        words = np.frombuffer(buffer, dtype="<u8").astype(np.uint64).reshape(len(rows), words_for(cols))
        return cls(words, cols)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BinaryMatrix":
        return cls(np.zeros((rows, words_for(cols)), dtype=np.uint64), cols)

    @classmethod
    def stack(cls, top: "BinaryMatrix", bottom: "BinaryMatrix") -> "BinaryMatrix":
        """Vertical concatenation of two matrices with equal column counts."""
        if top.cols != bottom.cols:
            raise DimensionMismatchError(f"Cannot stack {top.cols} and {bottom.cols} columns")
        return cls(np.vstack([top.words, bottom.words]), top.cols)

    # Views

    @property
    def rows(self) -> int:
        return self._words.shape[0]

    @property
    def cols(self) -> int:
        return self._cols

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self._cols

    @property
    def words(self) -> np.ndarray:
        """Packed row words; treat as read-only."""
        return self._words

    @property
    def row_weights(self) -> np.ndarray:
        """Cached Hamming weight of every row; treat as read-only."""
        return self._weights

    @property
    def energy(self) -> int:
        """Total number of ones, E(H)."""
        return self._energy

    def recount(self) -> int:
        """Recount the ones from scratch, ignoring the cache."""
        return popcount(self._words)

    def row_int(self, i: int) -> int:
        """Row i as a Python int with bit j holding column j."""
        return int.from_bytes(self._words[i].astype("<u8").tobytes(), "little")

    def row_ints(self) -> List[int]:
        return [self.row_int(i) for i in range(self.rows)]

    def row_indices(self, i: int) -> np.ndarray:
        """Ascending column indices of the ones in row i."""
        row_bytes = self._words[i].astype("<u8").view(np.uint8)
        return np.flatnonzero(np.unpackbits(row_bytes, count=self._cols, bitorder="little"))

    def to_dense(self) -> np.ndarray:
        """Dense uint8 array of shape (m, n)."""
        as_bytes = self._words.astype("<u8").view(np.uint8).reshape(self.rows, -1)
        return np.unpackbits(as_bytes, axis=1, count=self._cols, bitorder="little")

    def copy(self) -> "BinaryMatrix":
        clone = BinaryMatrix.__new__(BinaryMatrix)
        clone._words = self._words.copy()
        clone._cols = self._cols
        clone._weights = self._weights.copy()
        clone._energy = self._energy
        return clone

    # Row operations

    def _check_pair(self, i: int, j: int) -> None:
        if not (0 <= i < self.rows and 0 <= j < self.rows):
            raise IndexError(f"Row pair ({i}, {j}) out of range for {self.rows} rows")
        if i == j:
            raise SameRowError(f"Cannot add row {i} to itself")

    def transition_delta(self, i: int, j: int) -> int:
        """Change in energy if row i were added into row j; H is not modified."""
        self._check_pair(i, j)
        return popcount(self._words[i] ^ self._words[j]) - int(self._weights[j])

    def row_add(self, i: int, j: int) -> int:
        """Replace row j by row i XOR row j.

        Returns:
            The signed change in the number of ones.
        """
        self._check_pair(i, j)
        updated = self._words[i] ^ self._words[j]
        weight = popcount(updated)
        delta = weight - int(self._weights[j])
        self._words[j] = updated
        self._weights[j] = weight
        self._energy += delta
        return delta

    # Dunder

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BinaryMatrix):
            return NotImplemented
        return self._cols == other._cols and np.array_equal(self._words, other._words)

    __hash__ = None  # mutable

    def __repr__(self) -> str:
        return f"BinaryMatrix(rows={self.rows}, cols={self._cols}, energy={self._energy})"


def energy(H: BinaryMatrix) -> int:
    return H.energy


def row_add(H: BinaryMatrix, i: int, j: int) -> int:
    """Add row i into row j of H in place and return the energy delta."""
    return H.row_add(i, j)


def transition_delta(H: BinaryMatrix, i: int, j: int) -> int:
    """Preview the energy delta of adding row i into row j."""
    return H.transition_delta(i, j)


class RowBasis:
    """Echelon basis of a GF(2) row space over Python-int bitsets.

    Every stored vector has a distinct leading bit (its pivot). A vector is in
    the span iff reducing it by pivots clears it completely.
    """

    def __init__(self, cols: int):
        self.cols = cols
        self._pivots: Dict[int, int] = {}
        self._vectors: List[int] = []

    @classmethod
    def from_matrix(cls, H: BinaryMatrix) -> "RowBasis":
        basis = cls(H.cols)
        for row in H.row_ints():
            basis.insert(row)
        return basis

    @property
    def rank(self) -> int:
        return len(self._vectors)

    @property
    def vectors(self) -> List[int]:
        """Stored basis vectors in insertion order."""
        return list(self._vectors)

    def reduce(self, vector: int) -> int:
        """Residual of vector after elimination; zero iff it lies in the span."""
        while vector:
            pivot = vector.bit_length() - 1
            basis_vector = self._pivots.get(pivot)
            if basis_vector is None:
                return vector
            vector ^= basis_vector
        return 0

    def contains(self, vector: int) -> bool:
        return self.reduce(vector) == 0

    def insert(self, vector: int) -> bool:
        """Add vector to the basis if independent.

        Returns:
            True if the rank grew.
        """
        residual = self.reduce(vector)
        if not residual:
            return False
        self._pivots[residual.bit_length() - 1] = residual
        self._vectors.append(residual)
        return True

    def to_matrix(self) -> BinaryMatrix:
        return BinaryMatrix.from_row_ints(self._vectors, self.cols)


def row_basis(H: BinaryMatrix) -> RowBasis:
    """Gaussian elimination of the rows of H."""
    return RowBasis.from_matrix(H)


def rank(H: BinaryMatrix) -> int:
    return row_basis(H).rank


def same_code(H: BinaryMatrix, G: BinaryMatrix) -> bool:
    """True iff H and G have the same row space, hence define the same code."""
    if H.cols != G.cols:
        raise DimensionMismatchError(f"Column counts differ: {H.cols} != {G.cols}")
    basis_h = row_basis(H)
    basis_g = row_basis(G)
    if basis_h.rank != basis_g.rank:
        return False
    return all(basis_h.contains(vector) for vector in basis_g.vectors)


def require_full_rank(H: BinaryMatrix, basis: Optional[RowBasis] = None) -> RowBasis:
    """Raise RankDeficientInputError unless rank(H) == m."""
    basis = basis or row_basis(H)
    if basis.rank != H.rows:
        raise RankDeficientInputError(
            f"Matrix has {H.rows} rows but rank {basis.rank}; rows must be linearly independent"
        )
    return basis
