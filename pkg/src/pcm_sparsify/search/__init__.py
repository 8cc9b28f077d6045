"""Sparsification engine: proposals, greedy search, annealing and traces."""

from .engine import SearchKind, SearchReport, anneal, greedy
from .flags import DirtyFlags, TransitionProposal, analyze, apply_transition, random_proposal
from .replicas import best_report, default_workers, replica_seeds, run_replicas
from .schedule import (
    Schedule,
    TemperatureSpec,
    accept,
    probability_at,
    temperature,
    temperature_for_delta,
)
from .trace import TRACE_COLUMNS, RunTrace, trace_from_csv, trace_to_csv

__all__ = [
    # Engine
    "SearchKind",
    "SearchReport",
    "anneal",
    "greedy",
    # Proposals
    "DirtyFlags",
    "TransitionProposal",
    "analyze",
    "apply_transition",
    "random_proposal",
    # Replicas
    "best_report",
    "default_workers",
    "replica_seeds",
    "run_replicas",
    # Temperatures
    "Schedule",
    "TemperatureSpec",
    "accept",
    "probability_at",
    "temperature",
    "temperature_for_delta",
    # Traces
    "TRACE_COLUMNS",
    "RunTrace",
    "trace_from_csv",
    "trace_to_csv",
]
