"""Timing harness for bit-sliced syndrome checks."""

from typing import Iterable, Optional
import logging
import time

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field

from ..core.errors import ValidationError
from .batch import BATCH_WIDTH
from .sparse import SparseRows, syndrome_lanes

logger = logging.getLogger(__name__)

BENCH_COLUMNS = ["ones", "mean_ns_per_word", "words"]

# Batches per kernel call; bounds the gathered (ones x chunk) lane array.
_CHUNK_BATCHES = 256


class BenchResult(BaseModel):
    """Median per-word check time of one matrix."""
    ones: int = Field(ge=0, description="Ones in the benchmarked matrix")
    mean_ns_per_word: Optional[float] = Field(default=None, description="None when no words were checked")
    words: int = Field(ge=0, description="Words checked per repetition")
    repeats: int = Field(default=0, ge=0)


def _check_lanes(rows: SparseRows, lanes: np.ndarray) -> int:
    rejected = 0
    for start in range(0, lanes.shape[1], _CHUNK_BATCHES):
        syndromes, _ = syndrome_lanes(rows, lanes[:, start:start + _CHUNK_BATCHES])
        rejected += int(np.bitwise_count(np.bitwise_or.reduce(syndromes, axis=0)).sum())
    return rejected


def bench_check(
    rows: SparseRows,
    words: int,
    rng: np.random.Generator,
    repeats: int = 5,
) -> BenchResult:
    """Time check_batch over uniformly random words.

    One untimed warm-up pass, then ``repeats`` timed passes on freshly drawn words;
    the reported time is the median pass divided by the word count.

    Args:
        rows: Sparse matrix to check against
        words: Words per pass, a multiple of 64
        rng: Source of the random words
        repeats: Timed passes
    """
    if words % BATCH_WIDTH:
        raise ValidationError(f"Word count must be a multiple of {BATCH_WIDTH}, got {words}")
    if words == 0:
        return BenchResult(ones=rows.energy, words=0)

    batches = words // BATCH_WIDTH
    high = np.iinfo(np.uint64).max

    def draw() -> np.ndarray:
        return rng.integers(high, size=(rows.cols, batches), dtype=np.uint64, endpoint=True)

    _check_lanes(rows, draw())
    timings = []
    for _ in range(repeats):
        lanes = draw()
        start = time.perf_counter_ns()
        _check_lanes(rows, lanes)
        timings.append(time.perf_counter_ns() - start)

    mean_ns = float(np.median(timings)) / words
    logger.info("%d ones: %.2f ns/word over %d words x %d repeats", rows.energy, mean_ns, words, repeats)
    return BenchResult(ones=rows.energy, mean_ns_per_word=mean_ns, words=words, repeats=repeats)


def bench_to_csv(results: Iterable[BenchResult]) -> bytes:
    """CSV with header ``ones,mean_ns_per_word,words``; empty measurements leave the time blank."""
    frame = pd.DataFrame(
        [result.model_dump(include=set(BENCH_COLUMNS)) for result in results],
        columns=BENCH_COLUMNS,
    )
    return frame.to_csv(index=False, float_format="%.6g", lineterminator="\n").encode("ascii")
