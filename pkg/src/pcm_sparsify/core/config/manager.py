"""Configuration manager for pcm-sparsify."""

import os
from pathlib import Path
from typing import Any, Dict, Optional
import logging

from pydantic import ValidationError as PydanticValidationError

from ..errors import ConfigurationError
from .base import ConfigurationBase
from .presets import get_schedule_preset
from .schema import GlobalConfig, ProfileConfig, RunConfig

logger = logging.getLogger(__name__)

_TEMPERATURE_FLAGS = {
    ("f0", "p0", "t0"): ("start", {"f": 0.05, "p": 0.01}),
    ("f1", "p1", "t1"): ("finish", {"f": 0.01, "p": 0.01}),
}


class ConfigManager(ConfigurationBase):
    """Loads run profiles and assembles RunConfig objects."""

    def __init__(self, config_path: Optional[str] = None):
        """Initialize configuration manager.

        Args:
            config_path: Optional path to config file. Falls back to $PCM_CONFIG, then
                config/config.yaml in the repository. Only an explicitly named file
                has to exist.
        """
        super().__init__()
        explicit = config_path or os.getenv("PCM_CONFIG")
        self.config_path = Path(explicit) if explicit else self.config_dir / "config.yaml"
        if explicit and not self.config_path.exists():
            raise ConfigurationError(f"Configuration file not found: {self.config_path}")

        config_dict = self._load_yaml(self.config_path)
        try:
            self.config = GlobalConfig(**config_dict)
        except PydanticValidationError as e:
            raise ConfigurationError(f"Invalid configuration in {self.config_path}: {e}") from e
        logger.debug("Loaded %d profiles from %s", len(self.config.profiles), self.config_path)

    def get_profile(self, name: Optional[str] = None) -> ProfileConfig:
        """Get a named profile.

        Args:
            name: Profile name. If not provided, uses the default profile, which may be absent.

        Returns:
            The profile settings.
        """
        profile_name = name or self.config.default_profile
        if profile_name in self.config.profiles:
            return self.config.profiles[profile_name]
        if name is None:
            return ProfileConfig()
        raise ConfigurationError(f"Profile not found: {name}")

    def build_run_config(self, profile: Optional[str] = None, **overrides: Any) -> RunConfig:
        """Merge preset, profile and explicit values into a validated RunConfig.

        Precedence, lowest first: model defaults, reference preset, profile, overrides.
        Overrides equal to None are ignored.
        """
        explicit = {k: v for k, v in overrides.items() if v is not None}
        profile_values = self.get_profile(profile).overrides()

        merged: Dict[str, Any] = {}
        preset_name = explicit.get("preset") or profile_values.get("preset")
        if preset_name:
            preset = get_schedule_preset(preset_name)
            merged.update(
                start={"f": preset["start_f"], "p": preset["start_p"]},
                finish={"f": preset["finish_f"], "p": preset["finish_p"]},
                steps=preset["steps"],
            )
        merged.update(profile_values)

        # Single temperature components (CLI --f0/--p0/--t0 ...) patch the merged pair.
        for key, (field, default) in _TEMPERATURE_FLAGS.items():
            for flag, attr in zip(key, ("f", "p", "temperature")):
                if flag in explicit:
                    pair = dict(merged.get(field) or default)
                    pair[attr] = explicit.pop(flag)
                    merged[field] = pair
        merged.update(explicit)
        merged["profile"] = profile or (self.config.default_profile if profile_values else None)

        try:
            return RunConfig(**merged)
        except PydanticValidationError as e:
            raise ConfigurationError(f"Invalid run configuration: {e}") from e


def get_thread_cap() -> Optional[int]:
    """Parallelism cap from $PCM_THREADS, if set."""
    value = os.getenv("PCM_THREADS")
    if not value:
        return None
    try:
        cap = int(value)
    except ValueError as e:
        raise ConfigurationError(f"PCM_THREADS must be an integer, got {value!r}") from e
    if cap < 1:
        raise ConfigurationError("PCM_THREADS must be at least 1")
    return cap
