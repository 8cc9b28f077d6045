"""64-way bit-sliced syndrome checks."""

from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Union
import logging

import numpy as np

from ..core.errors import LengthMismatchError, ValidationError
from .sparse import BitVector, SparseRows, as_bits, syndrome_lanes

logger = logging.getLogger(__name__)

BATCH_WIDTH = 64


@dataclass(frozen=True)
class WordBatch:
    """Up to 64 words transposed: bit b of lane j is symbol j of word b."""
    lanes: np.ndarray
    count: int

    @property
    def cols(self) -> int:
        return len(self.lanes)


@dataclass(frozen=True)
class SyndromeBatch:
    """Bit b of word i is syndrome component i of received word b."""
    words: np.ndarray
    count: int
    xor_count: int

    def error_mask(self) -> int:
        """Bits set for the non-codewords among the first ``count`` words."""
        combined = int(np.bitwise_or.reduce(self.words)) if len(self.words) else 0
        return combined & ((1 << self.count) - 1)

    def is_codeword(self, b: int) -> bool:
        if not 0 <= b < self.count:
            raise IndexError(f"Word {b} outside batch of {self.count}")
        return not (self.error_mask() >> b) & 1

    def syndrome(self, b: int) -> np.ndarray:
        """Syndrome of word b as a uint8 vector of length m."""
        if not 0 <= b < self.count:
            raise IndexError(f"Word {b} outside batch of {self.count}")
        return ((self.words >> np.uint64(b)) & np.uint64(1)).astype(np.uint8)

    def failing_words(self) -> List[int]:
        mask = self.error_mask()
        return [b for b in range(self.count) if (mask >> b) & 1]


def _lanes_from_bits(bits: np.ndarray) -> np.ndarray:
    """Transpose a (words, n) 0/1 array into uint64 lanes of shape (n, words / 64)."""
    packed = np.packbits(bits.T, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64)


def pack_batch(words: Sequence[BitVector], cols: Optional[int] = None) -> WordBatch:
    """Bit-transpose up to 64 words of equal length.

    Args:
        words: '0'/'1' strings or 0/1 sequences
        cols: Word length; required only when words is empty

    Raises:
        LengthMismatchError: Words differ in length from each other or from cols.
    """
    if len(words) > BATCH_WIDTH:
        raise ValidationError(f"A batch holds at most {BATCH_WIDTH} words, got {len(words)}")
    if cols is None:
        if not words:
            raise LengthMismatchError("Cannot infer the word length of an empty batch")
        cols = len(words[0])
    bits = np.zeros((BATCH_WIDTH, cols), dtype=np.uint8)
    for b, word in enumerate(words):
        bits[b] = as_bits(word, cols)
    return WordBatch(_lanes_from_bits(bits)[:, 0], len(words))


def unpack_batch(batch: WordBatch) -> np.ndarray:
    """The batch's words as a (count, n) uint8 array."""
    as_bytes = batch.lanes.astype("<u8").view(np.uint8).reshape(batch.cols, 8)
    bits = np.unpackbits(as_bytes, axis=1, bitorder="little")
    return np.ascontiguousarray(bits.T[:batch.count])


def check_batch(rows: SparseRows, batch: WordBatch) -> SyndromeBatch:
    """Syndromes of all words in the batch with one lane XOR per one of H.

    Raises:
        LengthMismatchError: The batch has a different number of lanes than H has columns.
    """
    if batch.cols != rows.cols:
        raise LengthMismatchError(f"Batch has {batch.cols} lanes, matrix has {rows.cols} columns")
    syndromes, lanes_combined = syndrome_lanes(rows, batch.lanes)
    return SyndromeBatch(syndromes, batch.count, lanes_combined)


def check_words(rows: SparseRows, words: Sequence[BitVector]) -> List[bool]:
    """Codeword verdict for any number of words, 64 at a time."""
    verdicts: List[bool] = []
    for start in range(0, len(words), BATCH_WIDTH):
        result = check_batch(rows, pack_batch(words[start:start + BATCH_WIDTH], rows.cols))
        mask = result.error_mask()
        verdicts.extend(not (mask >> b) & 1 for b in range(result.count))
    return verdicts


def read_words(path: Union[str, Path], cols: int) -> List[str]:
    """Received words from a file of '0'/'1' lines, each of length cols."""
    words = []
    with open(path, "rb") as f:
        for number, raw in enumerate(f, start=1):
            line = raw.rstrip(b"\r\n").decode("ascii", errors="replace")
            if not line:
                continue
            if line.strip("01"):
                raise ValidationError(f"{path}:{number}: only '0' and '1' are allowed")
            if len(line) != cols:
                raise LengthMismatchError(f"{path}:{number}: word has length {len(line)}, expected {cols}")
            words.append(line)
    logger.debug("Read %d words from %s", len(words), path)
    return words
