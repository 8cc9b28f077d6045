import math

import numpy as np
import pytest
from pydantic import ValidationError as PydanticValidationError

from pcm_sparsify.core.errors import ConfigurationError
from pcm_sparsify.search import (
    Schedule,
    TemperatureSpec,
    accept,
    probability_at,
    temperature,
    temperature_for_delta,
)


def test_temperature_from_delta():
    """Test T = -d / ln p for an uphill move of two ones accepted 4% of the time."""
    assert temperature_for_delta(2, 0.04) == pytest.approx(0.62133, abs=5e-6)


@pytest.mark.parametrize(
    "f, p, n, expected",
    [
        (0.05, 0.01, 396, 4.30),   # LTE-396 start
        (0.01, 0.01, 396, 0.86),   # LTE-396 finish
        (0.05, 0.01, 127, 1.38),   # BCH-127 start
        (0.01, 0.01, 127, 0.28),   # BCH-127 finish
        (0.05, 0.01, 255, 2.77),   # BCH-255 start
        (0.03, 0.01, 255, 1.66),   # BCH-255 finish
        (0.004, 0.01, 7200, 6.25),  # BCH-7200 start
        (0.003, 0.01, 7200, 4.69),  # BCH-7200 finish
    ],
)
def test_reference_temperatures(f, p, n, expected):
    assert temperature(TemperatureSpec(f=f, p=p), n) == pytest.approx(expected, abs=0.005)


def test_probability_at():
    """Test p2 = p1^(d2/d1) with d1 = 2, p1 = 0.04."""
    spec = TemperatureSpec(f=2.0, p=0.04)
    assert probability_at(spec, 1, 4) == pytest.approx(0.0016, rel=1e-4)
    assert probability_at(spec, 1, 1) == pytest.approx(0.2, rel=1e-4)
    assert probability_at(spec, 1, 2) == pytest.approx(0.04, rel=1e-12)


def test_probability_matches_temperature():
    spec = TemperatureSpec(f=0.05, p=0.01)
    T = temperature(spec, 396)
    assert probability_at(spec, 396, 7) == pytest.approx(math.exp(-7 / T), rel=1e-9)


def test_raw_temperature_override():
    spec = TemperatureSpec(f=0.05, p=0.01, temperature=1.5)
    assert temperature(spec, 396) == 1.5
    assert probability_at(spec, 396, 3) == pytest.approx(math.exp(-2))


@pytest.mark.parametrize("kwargs", [{"f": 0, "p": 0.5}, {"f": 0.1, "p": 1.0}, {"f": 0.1, "p": 0.0}])
def test_invalid_specs(kwargs):
    with pytest.raises(PydanticValidationError):
        TemperatureSpec(**kwargs)


def test_accept_downhill_always(rng):
    """Test d <= 0 is accepted at any temperature."""
    assert all(accept(0, 1e-9, rng) for _ in range(1000))
    assert all(accept(-3, 0.5, rng) for _ in range(1000))


def test_accept_rate_matches_boltzmann(rng):
    """Test the acceptance rate of d = 2 at T = 0.62133 is 4% within 5 sigma."""
    trials = 1_000_000
    d, T = 2, 0.62133
    expected = math.exp(-d / T)
    accepted = sum(accept(d, T, rng) for _ in range(trials))
    sigma = math.sqrt(expected * (1 - expected) / trials)
    assert abs(accepted / trials - expected) < 5 * sigma


def test_plateau_temperatures_are_geometric():
    """Test the plateaus run T0 * alpha^t for t = 0..s and end at F."""
    schedule = Schedule(start=TemperatureSpec(f=0.05, p=0.01), finish=TemperatureSpec(f=0.01, p=0.01), steps=40)
    temps = schedule.plateau_temperatures(396)
    t0, final = schedule.bounds(396)
    alpha = schedule.alpha(396)

    assert len(temps) == 41
    assert temps[0] == pytest.approx(t0)
    assert temps[-1] == pytest.approx(final, rel=1e-9)
    assert np.allclose(temps, t0 * alpha ** np.arange(41), rtol=1e-12)
    assert 0 < alpha < 1
    assert schedule.total_iterations(396) == 4100


def test_constant_temperature_schedule():
    """Test T0 == F runs a single plateau."""
    spec = TemperatureSpec(f=0.02, p=0.01)
    schedule = Schedule(start=spec, finish=spec, steps=1)
    assert schedule.alpha(100) == 1.0
    assert len(schedule.plateau_temperatures(100)) == 1


def test_heating_schedule_rejected():
    """Test a final temperature above the initial one is a configuration error."""
    printed = Schedule(
        start=TemperatureSpec(f=0.05, p=0.01, temperature=1.38),
        finish=TemperatureSpec(f=0.03, p=0.01, temperature=1.66),
        steps=10,
    )
    with pytest.raises(ConfigurationError):
        printed.plateau_temperatures(255)

    computed = Schedule(start=TemperatureSpec(f=0.05, p=0.01), finish=TemperatureSpec(f=0.03, p=0.01), steps=10)
    t0, final = computed.validate_cooling(255)
    assert t0 > final
