"""Configuration schemas for pcm-sparsify."""

from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

Mode = Literal["greedy", "anneal", "oracle", "check", "bench", "stats"]


class TemperatureSettings(BaseModel):
    """A temperature given as an uphill fraction f of the columns and its acceptance probability p."""
    f: float = Field(gt=0, description="Uphill delta as a fraction of the column count")
    p: float = Field(gt=0, lt=1, description="Probability of accepting an uphill move of f * N ones")
    temperature: Optional[float] = Field(
        default=None,
        gt=0,
        description="Raw temperature; overrides (f, p) when set"
    )


class RunConfig(BaseModel):
    """Everything one CLI invocation needs."""
    input: Path = Field(description="Alist file holding the parity-check matrix")
    mode: Mode = Field(description="Operation to run")
    start: TemperatureSettings = Field(
        default_factory=lambda: TemperatureSettings(f=0.05, p=0.01),
        description="Initial temperature T0"
    )
    finish: TemperatureSettings = Field(
        default_factory=lambda: TemperatureSettings(f=0.01, p=0.01),
        description="Final temperature F"
    )
    steps: int = Field(default=5120, ge=1, description="Number of cooling steps s")
    iters_per_temp: int = Field(default=100, ge=1, description="Iterations per temperature plateau")
    replicas: int = Field(default=1, ge=1, description="Independent runs, reduced by minimum energy")
    seed: Optional[int] = Field(default=None, ge=0, description="Root seed; drawn from OS entropy when unset")
    max_stall: Optional[int] = Field(default=None, ge=1, description="Greedy stop after this many clean-state misses")
    workers: Optional[int] = Field(default=None, ge=1, description="Process count for replicas")
    budget: int = Field(default=24, ge=1, description="Largest rank the oracle enumerates")
    bench_words: int = Field(default=1 << 20, ge=0, description="Random words per benchmark repetition")
    bench_repeats: int = Field(default=5, ge=1, description="Timed benchmark repetitions")
    preset: Optional[str] = Field(default=None, description="Reference schedule to start from")
    profile: Optional[str] = Field(default=None, description="Config profile the values came from")
    output: Optional[Path] = Field(default=None, description="Sparsified alist / oracle witness / CSV output")
    trace: Optional[Path] = Field(default=None, description="Trace CSV path; suffixed by replica index")
    summary: Optional[Path] = Field(default=None, description="Summary report path; stdout when unset")
    words: Optional[Path] = Field(default=None, description="Received words, one '0'/'1' line each")
    compare: List[Path] = Field(default_factory=list, description="Further matrices to benchmark")

    @model_validator(mode="after")
    def _check_mode_fields(self) -> "RunConfig":
        if self.mode == "check" and self.words is None:
            raise ValueError("check mode needs a words file")
        if self.mode == "bench" and self.bench_words % 64:
            raise ValueError("bench_words must be a multiple of 64")
        return self


class ProfileConfig(BaseModel):
    """Partial RunConfig stored under a profile name."""
    start: Optional[TemperatureSettings] = None
    finish: Optional[TemperatureSettings] = None
    steps: Optional[int] = None
    iters_per_temp: Optional[int] = None
    replicas: Optional[int] = None
    seed: Optional[int] = None
    max_stall: Optional[int] = None
    workers: Optional[int] = None
    budget: Optional[int] = None
    bench_words: Optional[int] = None
    bench_repeats: Optional[int] = None
    preset: Optional[str] = None

    def overrides(self) -> Dict[str, Any]:
        return self.model_dump(exclude_none=True)


class GlobalConfig(BaseModel):
    """Global configuration."""
    profiles: Dict[str, ProfileConfig] = Field(
        default_factory=dict,
        description="Named run profiles"
    )
    default_profile: str = Field(
        default="default",
        description="Profile used when none is named"
    )
