"""Independent search replicas run in parallel and reduced by minimum energy."""

from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Sequence, Tuple
import logging
import os

import numpy as np
import psutil

from ..core.config import get_thread_cap
from ..core.matrix import BinaryMatrix, require_full_rank
from .engine import SearchKind, SearchReport, anneal, greedy
from .schedule import Schedule

logger = logging.getLogger(__name__)


def default_workers(replicas: int) -> int:
    """Physical cores, capped by the replica count and $PCM_THREADS."""
    cores = psutil.cpu_count(logical=False) or os.cpu_count() or 1
    workers = min(replicas, cores)
    cap = get_thread_cap()
    if cap is not None:
        workers = min(workers, cap)
    return max(1, workers)


def replica_seeds(seed: int, replicas: int) -> List[np.random.SeedSequence]:
    """Independent child seed sequences, one per replica."""
    return np.random.SeedSequence(seed).spawn(replicas)


def _run_one(task: Tuple[BinaryMatrix, SearchKind, np.random.SeedSequence, int, int, Dict[str, Any]]) -> SearchReport:
    H, kind, seed_seq, seed, replica, params = task
    rng = np.random.default_rng(seed_seq)
    if kind == "anneal":
        return anneal(
            H, params["schedule"], rng, params.get("trace_every"), seed=seed, replica=replica
        )
    return greedy(
        H, params.get("max_stall"), rng, params.get("trace_every"), seed=seed, replica=replica
    )


def run_replicas(
    H: BinaryMatrix,
    kind: SearchKind,
    replicas: int = 1,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    *,
    schedule: Optional[Schedule] = None,
    max_stall: Optional[int] = None,
    trace_every: Optional[int] = None,
) -> List[SearchReport]:
    """Run independent searches from distinct child seeds of one root seed.

    Args:
        H: Full-rank input matrix, shared read-only by every replica
        kind: "anneal" or "greedy"
        replicas: Number of runs
        seed: Root seed; drawn from OS entropy when None and recorded in every report
        workers: Process count; defaults to default_workers(replicas)
        schedule: Required for annealing
        max_stall: Greedy stall window
        trace_every: Periodic trace sampling interval

    Returns:
        One report per replica, ordered by replica index.
    """
    if replicas < 1:
        raise ValueError(f"replicas must be at least 1, got {replicas}")
    if kind == "anneal" and schedule is None:
        raise ValueError("Annealing replicas need a schedule")
    require_full_rank(H)
    if kind == "anneal":
        schedule.validate_cooling(H.cols)

    if seed is None:
        seed = int(np.random.SeedSequence().entropy)
    workers = min(workers or default_workers(replicas), replicas)
    params = {"schedule": schedule, "max_stall": max_stall, "trace_every": trace_every}
    tasks = [
        (H, kind, child, seed, index, params)
        for index, child in enumerate(replica_seeds(seed, replicas))
    ]
    logger.info("Running %d %s replica(s) on %d worker(s), seed=%d", replicas, kind, workers, seed)

    if workers == 1:
        return [_run_one(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(_run_one, tasks))


def best_report(reports: Sequence[SearchReport]) -> SearchReport:
    """Lowest best_energy, ties broken by the lower replica index."""
    if not reports:
        raise ValueError("No reports to reduce")
    return min(reports, key=lambda report: (report.best_energy, report.replica))
