"""Temperature model, geometric cooling and the Metropolis acceptance test.

A temperature is specified by an uphill delta d and the probability p of
accepting it, T = -d / ln p, with d = f * N for a matrix of N columns.
"""

from typing import Optional, Tuple
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..core.errors import ConfigurationError

R_BITS = 30
R_MAX = 1 << R_BITS
_R_LOG_SCALE = R_BITS * math.log(2)


class TemperatureSpec(BaseModel):
    """(f, p) description of a temperature, with an optional raw override."""
    model_config = ConfigDict(frozen=True)

    f: float = Field(gt=0, description="Uphill delta as a fraction of the column count")
    p: float = Field(gt=0, lt=1, description="Acceptance probability of that delta")
    temperature: Optional[float] = Field(default=None, gt=0, description="Raw temperature override")

    def delta(self, n: int) -> float:
        return self.f * n


def temperature_for_delta(d: float, p: float) -> float:
    """T such that an uphill move of d ones is accepted with probability p."""
    if d <= 0 or not 0 < p < 1:
        raise ValueError(f"Need d > 0 and 0 < p < 1, got d={d}, p={p}")
    return -d / math.log(p)


def temperature(spec: TemperatureSpec, n: int) -> float:
    """Temperature for a matrix with n columns."""
    if n < 1:
        raise ValueError(f"Column count must be positive, got {n}")
    if spec.temperature is not None:
        return spec.temperature
    return temperature_for_delta(spec.delta(n), spec.p)


def probability_at(spec: TemperatureSpec, n: int, d2: float) -> float:
    """Probability of accepting an uphill delta d2 at this temperature."""
    if d2 <= 0:
        raise ValueError(f"Uphill delta must be positive, got {d2}")
    if spec.temperature is not None:
        return math.exp(-d2 / spec.temperature)
    return spec.p ** (d2 / spec.delta(n))


def accept(d: int, T: float, rng: np.random.Generator) -> bool:
    """Metropolis test without exponentiation.

    Draws R uniform in [1, 2^30] and accepts iff d <= T * (30 ln 2 - ln R), which is
    R / 2^30 <= e^(-d/T). Moves with d <= 0 are accepted without a draw.
    """
    if d <= 0:
        return True
    r = int(rng.integers(1, R_MAX, endpoint=True))
    return d <= T * (_R_LOG_SCALE - math.log(r))


class Schedule(BaseModel):
    """Geometric cooling from T0 to F in s steps, Iter iterations per plateau."""
    model_config = ConfigDict(frozen=True)

    start: TemperatureSpec
    finish: TemperatureSpec
    steps: int = Field(default=1, ge=1, description="Number of cooling steps s")
    iters_per_temp: int = Field(default=100, ge=1, description="Iterations per plateau")

    def bounds(self, n: int) -> Tuple[float, float]:
        """(T0, F) for n columns."""
        return temperature(self.start, n), temperature(self.finish, n)

    def validate_cooling(self, n: int) -> Tuple[float, float]:
        t0, final = self.bounds(n)
        if final > t0 and not math.isclose(final, t0, rel_tol=1e-12):
            raise ConfigurationError(
                f"Non-cooling schedule: final temperature {final:.5g} exceeds initial {t0:.5g}"
            )
        return t0, final

    def alpha(self, n: int) -> float:
        """Cooling factor (F / T0)^(1/s)."""
        t0, final = self.validate_cooling(n)
        return (final / t0) ** (1.0 / self.steps)

    def plateau_temperatures(self, n: int) -> np.ndarray:
        """T0 * alpha^t for t = 0..s; a single plateau when T0 == F."""
        t0, final = self.validate_cooling(n)
        if math.isclose(t0, final, rel_tol=1e-12):
            return np.array([t0])
        return t0 * self.alpha(n) ** np.arange(self.steps + 1)

    def total_iterations(self, n: int) -> int:
        return len(self.plateau_temperatures(n)) * self.iters_per_temp
