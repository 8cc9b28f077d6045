"""Machine-readable run summaries."""

from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import BaseModel, Field

from .core.config import get_reference_ones, resolve_code
from .search import SearchReport, best_report


class RunSummary(BaseModel):
    """One JSON object per sparsify run.

    Every field except ``wall_time`` is reproducible from the seed.
    """
    kind: str = Field(description="anneal or greedy")
    input: Optional[str] = Field(default=None, description="Input alist path")
    code: Optional[str] = Field(default=None, description="Canonical code name, when recognized")
    initial_ones: int
    replica_best: List[int] = Field(description="Best ones of every replica, by replica index")
    best_ones: int
    best_replica: int
    best_percent: float = Field(description="best_ones / initial_ones in percent, 1 decimal")
    iterations: int = Field(description="Iterations of the winning replica")
    seed: Optional[int] = Field(default=None, description="Root seed; replay with --seed")
    t0: Optional[float] = None
    f: Optional[float] = None
    reference_anneal: Optional[int] = Field(default=None, description="Published annealing result for the code")
    output: Optional[str] = Field(default=None, description="Path of the winning matrix")
    wall_time: float = Field(description="Seconds, slowest replica")


def summarize(
    results: Sequence[SearchReport],
    input_path: Optional[Path] = None,
    output_path: Optional[Path] = None,
) -> RunSummary:
    if not results:
        raise ValueError("Cannot summarize an empty result set")
    ordered = sorted(results, key=lambda result: result.replica)
    winner = best_report(ordered)
    code = resolve_code(input_path.stem) if input_path else None
    reference = get_reference_ones(code) if code else None
    initial = winner.initial_energy
    percent = 100.0 * winner.best_energy / initial if initial else 100.0
    return RunSummary(
        kind=winner.kind,
        input=str(input_path) if input_path else None,
        code=code,
        initial_ones=initial,
        replica_best=[result.best_energy for result in ordered],
        best_ones=winner.best_energy,
        best_replica=winner.replica,
        best_percent=round(percent, 1),
        iterations=winner.iterations,
        seed=winner.seed,
        t0=round(winner.t0, 6) if winner.t0 is not None else None,
        f=round(winner.f, 6) if winner.f is not None else None,
        reference_anneal=reference.get("anneal") if reference else None,
        output=str(output_path) if output_path else None,
        wall_time=round(max(result.elapsed for result in ordered), 3),
    )


def report(
    results: Sequence[SearchReport],
    input_path: Optional[Path] = None,
    output_path: Optional[Path] = None,
) -> bytes:
    """JSON summary of a set of replica results, newline-terminated."""
    return (summarize(results, input_path, output_path).model_dump_json() + "\n").encode("ascii")
