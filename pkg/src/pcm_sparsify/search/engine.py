"""Greedy local search and simulated annealing over row additions."""

from typing import Literal, Optional
import logging
import time

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..core.matrix import BinaryMatrix, require_full_rank
from .flags import DirtyFlags, analyze, apply_transition
from .schedule import Schedule, accept
from .trace import RunTrace

logger = logging.getLogger(__name__)

SearchKind = Literal["anneal", "greedy"]


class SearchReport(BaseModel):
    """Outcome of one search run."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    kind: SearchKind = Field(description="Search that produced the report")
    best_matrix: BinaryMatrix = Field(description="Lowest-energy matrix visited")
    final_matrix: BinaryMatrix = Field(description="Matrix held when the run stopped")
    best_energy: int = Field(ge=0)
    initial_energy: int = Field(ge=0)
    iterations: int = Field(default=0, ge=0)
    accepted: int = Field(default=0, ge=0, description="Applied transitions")
    uphill_accepted: int = Field(default=0, ge=0, description="Applied transitions with d > 0")
    elapsed: float = Field(default=0.0, ge=0, description="Wall-clock seconds")
    trace: RunTrace = Field(default_factory=RunTrace)
    seed: Optional[int] = Field(default=None, description="Root seed of the run, for replay")
    replica: int = Field(default=0, ge=0, description="Replica index within a batch")
    t0: Optional[float] = Field(default=None, description="Initial temperature (anneal only)")
    f: Optional[float] = Field(default=None, description="Final temperature (anneal only)")

    @property
    def final_energy(self) -> int:
        return self.final_matrix.energy

    @property
    def improvement(self) -> float:
        """Best energy as a percentage of the initial energy."""
        if self.initial_energy == 0:
            return 100.0
        return 100.0 * self.best_energy / self.initial_energy


class _RunState:
    """Current and best-so-far matrices plus counters shared by both searches."""

    def __init__(self, H: BinaryMatrix, trace: RunTrace):
        self.current = H.copy()
        self.flags = DirtyFlags(H.rows)
        self.best = self.current.copy()
        self.trace = trace
        self.iterations = 0
        self.accepted = 0
        self.uphill = 0
        self.started = time.perf_counter()

    def elapsed(self) -> float:
        return time.perf_counter() - self.started

    def sample(self, temperature: float) -> None:
        self.trace.record(self.elapsed(), self.current.energy, temperature)

    def apply(self, proposal, temperature: float) -> None:
        apply_transition(self.current, self.flags, proposal)
        self.accepted += 1
        if proposal.d > 0:
            self.uphill += 1
        if self.current.energy < self.best.energy:
            self.best = self.current.copy()
            self.sample(temperature)
            logger.debug("New best %d ones after %d iterations (T=%.4g)", self.best.energy, self.iterations, temperature)

    def report(self, kind: SearchKind, H: BinaryMatrix, seed: Optional[int], replica: int, **extra) -> SearchReport:
        return SearchReport(
            kind=kind,
            best_matrix=self.best,
            final_matrix=self.current,
            best_energy=self.best.energy,
            initial_energy=H.energy,
            iterations=self.iterations,
            accepted=self.accepted,
            uphill_accepted=self.uphill,
            elapsed=self.elapsed(),
            trace=self.trace,
            seed=seed,
            replica=replica,
            **extra,
        )


def anneal(
    H: BinaryMatrix,
    schedule: Schedule,
    rng: np.random.Generator,
    trace_every: Optional[int] = None,
    *,
    seed: Optional[int] = None,
    replica: int = 0,
) -> SearchReport:
    """Simulated annealing with geometric cooling.

    Runs steps + 1 plateaus of ``schedule.iters_per_temp`` iterations from T0 down
    to F. Each iteration proposes a transition with ``analyze``, runs the
    Metropolis test and applies accepted moves. All rows start dirty.

    Args:
        H: Full-rank parity-check matrix; not modified
        schedule: Temperatures and plateau lengths
        rng: Generator owned by this run
        trace_every: Also sample every this many iterations
        seed: Seed recorded in the report
        replica: Replica index recorded in the report

    Returns:
        SearchReport holding the best matrix seen and the final one.

    Raises:
        RankDeficientInputError: The rows of H are dependent.
        ConfigurationError: The schedule heats instead of cooling.
    """
    require_full_rank(H)
    temperatures = schedule.plateau_temperatures(H.cols)
    t0, final = float(temperatures[0]), float(temperatures[-1])
    state = _RunState(H, RunTrace(sample_interval=trace_every))
    state.sample(t0)

    if H.rows < 2:
        logger.info("Single-row matrix, nothing to anneal")
        return state.report("anneal", H, seed, replica, t0=t0, f=final)

    logger.info(
        "Annealing %dx%d matrix (%d ones): T0=%.4g F=%.4g over %d plateaus of %d",
        H.rows, H.cols, H.energy, t0, final, len(temperatures), schedule.iters_per_temp,
    )
    progress_every = max(1, len(temperatures) // 10)
    for plateau, T in enumerate(temperatures):
        T = float(T)
        for _ in range(schedule.iters_per_temp):
            proposal = analyze(state.current, state.flags, rng)
            if accept(proposal.d, T, rng):
                state.apply(proposal, T)
            state.iterations += 1
            if trace_every and state.iterations % trace_every == 0:
                state.sample(T)
        if not trace_every:
            state.sample(T)
        if (plateau + 1) % progress_every == 0:
            logger.info(
                "Plateau %d/%d T=%.4g energy=%d best=%d",
                plateau + 1, len(temperatures), T, state.current.energy, state.best.energy,
            )

    logger.info(
        "Annealing finished: %d -> %d ones in %.2fs (%d accepted, %d uphill)",
        H.energy, state.best.energy, state.elapsed(), state.accepted, state.uphill,
    )
    return state.report("anneal", H, seed, replica, t0=t0, f=final)


def greedy(
    H: BinaryMatrix,
    max_stall: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
    trace_every: Optional[int] = None,
    *,
    seed: Optional[int] = None,
    replica: int = 0,
) -> SearchReport:
    """Local search that only applies strictly improving transitions.

    Stops once every row is clean and ``max_stall`` consecutive random proposals
    (default 10 * m) have failed to improve.

    Raises:
        RankDeficientInputError: The rows of H are dependent.
    """
    require_full_rank(H)
    rng = rng if rng is not None else np.random.default_rng(seed)
    if max_stall is None:
        max_stall = 10 * H.rows
    elif max_stall < 0:
        raise ValueError(f"max_stall must be non-negative, got {max_stall}")
    state = _RunState(H, RunTrace(sample_interval=trace_every))
    state.sample(0.0)

    if H.rows < 2:
        return state.report("greedy", H, seed, replica)

    stall = 0
    while True:
        proposal = analyze(state.current, state.flags, rng)
        state.iterations += 1
        if proposal.d < 0:
            state.apply(proposal, 0.0)
            stall = 0
        elif state.flags.all_clean:
            stall += 1
            if stall >= max_stall:
                break
        if trace_every and state.iterations % trace_every == 0:
            state.sample(0.0)

    state.sample(0.0)
    logger.info(
        "Greedy finished: %d -> %d ones after %d iterations",
        H.energy, state.best.energy, state.iterations,
    )
    return state.report("greedy", H, seed, replica)
