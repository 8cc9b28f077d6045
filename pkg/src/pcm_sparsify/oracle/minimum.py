"""Exact minimum-ones parity-check matrices for small codes."""

from typing import Dict, List
import logging

from pydantic import BaseModel, ConfigDict, Field

from ..core.errors import BudgetExceededError
from ..core.matrix import BinaryMatrix, RowBasis, require_full_rank
from .enumeration import DEFAULT_BUDGET, DualEnumeration

logger = logging.getLogger(__name__)

EXHAUSTIVE_MAX_ROWS = 12


class OracleResult(BaseModel):
    """A sparsest parity-check matrix of a code and the dual weight distribution."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    min_total_ones: int = Field(ge=0, description="Fewest ones of any full-rank PCM of the code")
    witness: BinaryMatrix = Field(description="A PCM attaining min_total_ones")
    weight_histogram: Dict[int, int] = Field(description="Dual codewords per Hamming weight")

    def summary_line(self) -> str:
        return f"min_ones={self.min_total_ones} m={self.witness.rows} n={self.witness.cols}"


def min_weight_basis(H: BinaryMatrix, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Minimum-weight basis of the row space of H.

    Walks the dual codewords in ascending weight and keeps every vector that is
    independent of those already kept. The row space is a binary matroid, so this
    greedy choice minimizes the total number of ones.

    Raises:
        BudgetExceededError: H has more than budget rows.
        RankDeficientInputError: The rows of H are dependent.
    """
    enumeration = DualEnumeration(H, budget)
    weights = enumeration.weights
    basis = RowBasis(H.cols)
    chosen: List[int] = []
    total = 0
    for index in enumeration.weight_order():
        vector = enumeration.vector(int(index))
        if basis.insert(vector):
            chosen.append(vector)
            total += int(weights[index])
            if basis.rank == H.rows:
                break

    witness = BinaryMatrix.from_row_ints(chosen, H.cols)
    logger.info("Minimum-weight basis of %dx%d code: %d ones (input %d)", H.rows, H.cols, total, H.energy)
    return OracleResult(
        min_total_ones=total,
        witness=witness,
        weight_histogram=enumeration.weight_histogram(),
    )


def exhaustive_min_small(H: BinaryMatrix, max_rows: int = EXHAUSTIVE_MAX_ROWS) -> int:
    """Fewest ones over all bases of the row space, by branch and bound.

    Independent of the matroid argument: candidate bases are built from the
    weight-sorted dual code and pruned when even the lightest remaining vectors
    cannot beat the best basis found so far.

    Raises:
        BudgetExceededError: H has more than max_rows rows.
    """
    if H.rows > max_rows:
        raise BudgetExceededError(f"Exhaustive search is limited to {max_rows} rows, got {H.rows}")
    require_full_rank(H)
    enumeration = DualEnumeration(H, max_rows)
    order = enumeration.weight_order()
    weights = [int(enumeration.weights[i]) for i in order]
    vectors = [enumeration.vector(int(i)) for i in order]
    prefix = [0]
    for w in weights:
        prefix.append(prefix[-1] + w)

    best = H.energy
    pivots: Dict[int, int] = {}

    def residual(vector: int) -> int:
        while vector:
            pivot = pivots.get(vector.bit_length() - 1)
            if pivot is None:
                return vector
            vector ^= pivot
        return 0

    def search(start: int, total: int, remaining: int) -> None:
        nonlocal best
        if remaining == 0:
            best = min(best, total)
            return
        for i in range(start, len(vectors) - remaining + 1):
            if total + prefix[i + remaining] - prefix[i] >= best:
                break
            reduced = residual(vectors[i])
            if not reduced:
                continue
            lead = reduced.bit_length() - 1
            pivots[lead] = reduced
            search(i + 1, total + weights[i], remaining - 1)
            del pivots[lead]

    search(0, 0, H.rows)
    return best
