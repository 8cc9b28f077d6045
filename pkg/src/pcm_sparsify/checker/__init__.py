"""Syndrome checking against sparse parity-check matrices."""

from .batch import (
    BATCH_WIDTH,
    SyndromeBatch,
    WordBatch,
    check_batch,
    check_words,
    pack_batch,
    read_words,
    unpack_batch,
)
from .bench import BENCH_COLUMNS, BenchResult, bench_check, bench_to_csv
from .sparse import SparseRows, check_word, reconstruct, sparse_rows

__all__ = [
    "BATCH_WIDTH",
    "SyndromeBatch",
    "WordBatch",
    "check_batch",
    "check_words",
    "pack_batch",
    "read_words",
    "unpack_batch",
    "BENCH_COLUMNS",
    "BenchResult",
    "bench_check",
    "bench_to_csv",
    "SparseRows",
    "check_word",
    "reconstruct",
    "sparse_rows",
]
