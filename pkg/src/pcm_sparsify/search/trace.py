"""Time-versus-ones traces of a search run and their CSV form."""

from typing import Any, List, Optional, Tuple, Union
import io

import pandas as pd
from pydantic import BaseModel, Field

TRACE_COLUMNS = ["elapsed_s", "energy", "temperature"]

Sample = Tuple[float, int, float]


class RunTrace(BaseModel):
    """Samples of (elapsed seconds, energy, temperature) taken during a run."""
    samples: List[Sample] = Field(default_factory=list, description="Samples in time order")
    sample_interval: Optional[int] = Field(
        default=None,
        ge=1,
        description="Iterations between periodic samples; None samples per plateau and on improvements"
    )

    def record(self, elapsed: float, energy: int, temperature: float) -> None:
        # perf_counter is monotonic, but keep the column non-decreasing after rounding too
        if self.samples and elapsed < self.samples[-1][0]:
            elapsed = self.samples[-1][0]
        self.samples.append((float(elapsed), int(energy), float(temperature)))

    def __len__(self) -> int:
        return len(self.samples)

    def energies(self) -> List[int]:
        return [energy for _, energy, _ in self.samples]


def _as_trace(source: Any) -> RunTrace:
    return source if isinstance(source, RunTrace) else source.trace


def trace_to_csv(source: Union[RunTrace, Any]) -> bytes:
    """Render a trace (or a SearchReport's trace) as CSV.

    Args:
        source: RunTrace, or any object with a ``trace`` attribute

    Returns:
        ASCII bytes with header ``elapsed_s,energy,temperature`` and one line per sample,
        floats written with 6 significant digits.
    """
    trace = _as_trace(source)
    frame = pd.DataFrame(trace.samples, columns=TRACE_COLUMNS).astype(
        {"elapsed_s": "float64", "energy": "int64", "temperature": "float64"}
    )
    text = frame.to_csv(index=False, float_format="%.6g", lineterminator="\n")
    return text.encode("ascii")


def trace_from_csv(data: Union[bytes, str]) -> RunTrace:
    """Parse CSV written by trace_to_csv back into a RunTrace."""
    if isinstance(data, str):
        data = data.encode("ascii")
    frame = pd.read_csv(io.BytesIO(data), dtype={"elapsed_s": "float64", "energy": "int64", "temperature": "float64"})
    missing = [column for column in TRACE_COLUMNS if column not in frame.columns]
    if missing:
        raise ValueError(f"Trace CSV is missing columns: {', '.join(missing)}")
    samples = [
        (float(row.elapsed_s), int(row.energy), float(row.temperature))
        for row in frame.itertuples(index=False)
    ]
    return RunTrace(samples=samples)
