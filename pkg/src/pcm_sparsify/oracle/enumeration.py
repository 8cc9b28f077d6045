"""Enumeration of the row space (dual code) of a parity-check matrix."""

from typing import Iterator
import logging

import numpy as np

from ..core.errors import BudgetExceededError
from ..core.matrix import BinaryMatrix, require_full_rank

logger = logging.getLogger(__name__)

DEFAULT_BUDGET = 24


def _word_int(row: np.ndarray) -> int:
    return int.from_bytes(row.astype("<u8").tobytes(), "little")


class DualEnumeration:
    """All 2^m - 1 nonzero combinations of the rows of a full-rank matrix.

    Vectors come in reflected Gray-code order: consecutive vectors differ by
    exactly one basis row.
    """

    def __init__(self, H: BinaryMatrix, budget: int = DEFAULT_BUDGET):
        """Enumerate the row space of H.

        Args:
            H: Full-rank matrix whose rows span the dual code
            budget: Largest rank accepted

        Raises:
            BudgetExceededError: H has more than budget rows.
            RankDeficientInputError: The rows of H are dependent.
        """
        if H.rows > budget:
            raise BudgetExceededError(
                f"Enumerating 2^{H.rows} combinations exceeds the budget of 2^{budget}"
            )
        require_full_rank(H)
        self.m = H.rows
        self.cols = H.cols

        sequence = np.zeros((1, H.words.shape[1]), dtype=np.uint64)
        for k in range(self.m):
            sequence = np.concatenate([sequence, sequence[::-1] ^ H.words[k]])
        self._vectors = sequence[1:]
        self._weights = np.bitwise_count(self._vectors).sum(axis=1, dtype=np.uint16)
        logger.debug("Enumerated %d dual codewords of a %dx%d matrix", len(self), self.m, self.cols)

    def __len__(self) -> int:
        return len(self._vectors)

    def __iter__(self) -> Iterator[int]:
        for row in self._vectors:
            yield _word_int(row)

    @property
    def vectors(self) -> np.ndarray:
        """Packed vectors of shape (2^m - 1, words per row)."""
        return self._vectors

    @property
    def weights(self) -> np.ndarray:
        return self._weights

    def vector(self, index: int) -> int:
        return _word_int(self._vectors[index])

    def weight_order(self) -> np.ndarray:
        """Indices sorted by weight, ties kept in enumeration order."""
        return np.argsort(self._weights, kind="stable")

    def weight_histogram(self) -> dict[int, int]:
        counts = np.bincount(self._weights, minlength=self.cols + 1)
        return {int(w): int(c) for w, c in enumerate(counts) if c}
