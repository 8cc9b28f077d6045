import pytest

from pcm_sparsify.core.config import (
    ConfigManager,
    get_reference_ones,
    get_schedule_preset,
    get_thread_cap,
    list_codes,
    resolve_code,
    substitute_env_vars,
)
from pcm_sparsify.core.errors import ConfigurationError

PROFILES_YAML = """
default_profile: quick
profiles:
  quick:
    steps: 10
    replicas: 2
  hot:
    start:
      f: 0.2
      p: 0.01
    steps: 77
  plain:
    replicas: 1
"""


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text(PROFILES_YAML)
    return path


def test_defaults_without_profile(config_file):
    """Test the default profile is applied when none is named."""
    manager = ConfigManager(str(config_file))
    config = manager.build_run_config(input="h.alist", mode="anneal")
    assert config.steps == 10
    assert config.replicas == 2
    assert config.iters_per_temp == 100
    assert (config.start.f, config.start.p) == (0.05, 0.01)
    assert (config.finish.f, config.finish.p) == (0.01, 0.01)
    assert config.profile == "quick"


def test_explicit_values_override_profile(config_file):
    manager = ConfigManager(str(config_file))
    config = manager.build_run_config("hot", input="h.alist", mode="anneal", steps=5, seed=None)
    assert config.steps == 5
    assert config.start.f == 0.2
    assert config.seed is None


def test_single_temperature_flags_patch_pair(config_file):
    """Test --f0 style values patch only one component of the pair."""
    manager = ConfigManager(str(config_file))
    config = manager.build_run_config("hot", input="h.alist", mode="anneal", p0=0.05, t1=0.5)
    assert (config.start.f, config.start.p) == (0.2, 0.05)
    assert config.finish.temperature == 0.5
    assert config.finish.f == 0.01


def test_preset_below_profile(config_file):
    """Test a preset supplies the schedule and the profile still wins on steps."""
    manager = ConfigManager(str(config_file))
    config = manager.build_run_config("hot", input="h.alist", mode="anneal", preset="lte-396")
    assert config.finish.f == 0.01
    assert config.steps == 77
    config = manager.build_run_config("plain", input="h.alist", mode="anneal", preset="bch-255-207-6")
    assert config.finish.f == 0.03
    assert config.steps == 5_120_000


def test_env_substitution(tmp_path, monkeypatch):
    """Test ${VAR} values are read from the environment."""
    path = tmp_path / "seeded.yaml"
    path.write_text("profiles:\n  seeded:\n    seed: ${PCM_TEST_SEED}\n")
    monkeypatch.setenv("PCM_TEST_SEED", "99")
    config = ConfigManager(str(path)).build_run_config("seeded", input="h.alist", mode="greedy")
    assert config.seed == 99


def test_substitute_leaves_unknown_variables():
    assert substitute_env_vars({"a": ["${PCM_DOES_NOT_EXIST}"]}) == {"a": ["${PCM_DOES_NOT_EXIST}"]}


def test_unknown_profile(config_file):
    with pytest.raises(ConfigurationError):
        ConfigManager(str(config_file)).get_profile("missing")


def test_missing_explicit_file(tmp_path):
    with pytest.raises(ConfigurationError):
        ConfigManager(str(tmp_path / "nope.yaml"))


def test_env_config_path(config_file, monkeypatch):
    monkeypatch.setenv("PCM_CONFIG", str(config_file))
    assert ConfigManager().config_path == config_file


def test_invalid_yaml(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("profiles: [unclosed\n")
    with pytest.raises(ConfigurationError):
        ConfigManager(str(path))


@pytest.mark.parametrize(
    "overrides",
    [
        {"mode": "anneal", "replicas": 0},
        {"mode": "anneal", "p0": 1.5},
        {"mode": "bench", "bench_words": 100},
        {"mode": "check"},
        {"mode": "shuffle"},
    ],
)
def test_invalid_run_configs(config_file, overrides):
    """Test invalid values surface as ConfigurationError."""
    with pytest.raises(ConfigurationError):
        ConfigManager(str(config_file)).build_run_config(input="h.alist", **overrides)


def test_thread_cap(monkeypatch):
    assert get_thread_cap() is None
    monkeypatch.setenv("PCM_THREADS", "3")
    assert get_thread_cap() == 3
    monkeypatch.setenv("PCM_THREADS", "many")
    with pytest.raises(ConfigurationError):
        get_thread_cap()


def test_code_names():
    """Test aliases and file stems resolve to canonical names."""
    assert resolve_code("lte-396") == "LTE-TC-N396-K128"
    assert resolve_code("LTE-TC-N396-K128.alist") == "LTE-TC-N396-K128"
    assert resolve_code("BCH_63_45") == "BCH-63-45"
    assert resolve_code("hamming-7-4") is None
    assert "BCH-63-57" in list_codes()


def test_schedule_presets():
    preset = get_schedule_preset("lte-396")
    assert preset["n"] == 396
    assert preset["steps"] == 51_200
    with pytest.raises(ConfigurationError):
        get_schedule_preset("bch-63-45")


def test_reference_ones():
    assert get_reference_ones("bch-63-36") == {"bound": 378, "ip": 384, "greedy": 402, "anneal": 384}
    assert get_reference_ones("LTE-TC-N396-K128")["anneal"] == 2030
    assert get_reference_ones("unknown") is None
