"""Dirty-row bookkeeping and transition proposals.

A row is dirty when it may still take part in an improving row addition. Only
dirty rows are scanned; a row whose scan finds nothing is marked clean, and a row
that has just been rewritten is marked dirty again.
"""

from dataclasses import dataclass
from typing import Optional
import logging

import numpy as np

from ..core.errors import StaleProposalError, TooFewRowsError
from ..core.matrix import BinaryMatrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class TransitionProposal:
    """Add row ``i`` into row ``j``, changing the energy by ``d``."""
    i: int
    j: int
    d: int


class DirtyFlags:
    """One boolean per row with a running count of dirty rows."""

    def __init__(self, rows: int, dirty: bool = True):
        self._flags = np.full(rows, dirty, dtype=bool)
        self._count = rows if dirty else 0

    def __len__(self) -> int:
        return len(self._flags)

    @property
    def dirty_count(self) -> int:
        return self._count

    @property
    def all_clean(self) -> bool:
        return self._count == 0

    def is_dirty(self, i: int) -> bool:
        return bool(self._flags[i])

    def mark_dirty(self, i: int) -> None:
        if not self._flags[i]:
            self._flags[i] = True
            self._count += 1

    def mark_clean(self, i: int) -> None:
        if self._flags[i]:
            self._flags[i] = False
            self._count -= 1

    def dirty_rows(self) -> np.ndarray:
        return np.flatnonzero(self._flags)

    def copy(self) -> "DirtyFlags":
        clone = DirtyFlags(0)
        clone._flags = self._flags.copy()
        clone._count = self._count
        return clone


def _scan_row(H: BinaryMatrix, i: int, rng: np.random.Generator) -> Optional[TransitionProposal]:
    """First improving pairing of row i, scanning the other rows in random order.

    Both orientations are priced at once from the weight of row i XOR row j:
    adding i into j changes the energy by |ri ^ rj| - |rj|, adding j into i by
    |ri ^ rj| - |ri|. The forward orientation wins a tie.
    """
    words = H.words
    weights = H.row_weights
    xor_weights = np.bitwise_count(words ^ words[i]).sum(axis=1, dtype=np.int64)
    forward = xor_weights - weights
    reverse = xor_weights - weights[i]

    others = np.delete(np.arange(H.rows), i)
    order = rng.permutation(others)
    best = np.minimum(forward[order], reverse[order])
    hits = np.flatnonzero(best < 0)
    if hits.size == 0:
        return None

    j = int(order[hits[0]])
    if forward[j] <= reverse[j]:
        return TransitionProposal(i, j, int(forward[j]))
    return TransitionProposal(j, i, int(reverse[j]))


def random_proposal(H: BinaryMatrix, rng: np.random.Generator) -> TransitionProposal:
    """Uniformly random ordered pair of distinct rows."""
    if H.rows < 2:
        raise TooFewRowsError(f"Need at least two rows to pair, got {H.rows}")
    i = int(rng.integers(H.rows))
    j = int(rng.integers(H.rows - 1))
    j += j >= i
    return TransitionProposal(i, j, H.transition_delta(i, j))


def analyze(H: BinaryMatrix, flags: DirtyFlags, rng: np.random.Generator) -> TransitionProposal:
    """Propose the next transition.

    Picks a dirty row uniformly at random and returns its first improving pairing.
    If that row has none it is marked clean, and a uniformly random pair is
    proposed instead. With no dirty rows left the random pair is proposed directly.

    Raises:
        TooFewRowsError: H has fewer than two rows.
    """
    if H.rows < 2:
        raise TooFewRowsError(f"Need at least two rows to pair, got {H.rows}")
    if len(flags) != H.rows:
        raise ValueError(f"Flags cover {len(flags)} rows, matrix has {H.rows}")

    if flags.dirty_count:
        i = int(rng.choice(flags.dirty_rows()))
        proposal = _scan_row(H, i, rng)
        if proposal is not None:
            return proposal
        flags.mark_clean(i)

    return random_proposal(H, rng)


def apply_transition(H: BinaryMatrix, flags: DirtyFlags, proposal: TransitionProposal) -> int:
    """Perform the proposed row addition and mark the rewritten row dirty.

    Returns:
        The realized energy delta, equal to ``proposal.d``.

    Raises:
        StaleProposalError: H changed since the proposal was priced. H is left unchanged.
    """
    delta = H.row_add(proposal.i, proposal.j)
    if delta != proposal.d:
        # XOR is an involution, so a second addition restores row j
        H.row_add(proposal.i, proposal.j)
        raise StaleProposalError(
            f"Proposal {proposal.i}->{proposal.j} priced at {proposal.d}, now {delta}"
        )
    flags.mark_dirty(proposal.j)
    return delta
