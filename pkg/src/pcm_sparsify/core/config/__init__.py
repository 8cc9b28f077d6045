"""Configuration management for the pcm-sparsify tools."""

from .base import ConfigurationBase, substitute_env_vars
from .manager import ConfigManager, get_thread_cap
from .presets import (
    get_reference_ones,
    get_schedule_preset,
    list_codes,
    resolve_code,
)
from .schema import (
    GlobalConfig,
    Mode,
    ProfileConfig,
    RunConfig,
    TemperatureSettings,
)

__all__ = [
    # Loading
    "ConfigurationBase",
    "substitute_env_vars",
    # Configuration manager
    "ConfigManager",
    "get_thread_cap",
    # Reference tables
    "get_reference_ones",
    "get_schedule_preset",
    "list_codes",
    "resolve_code",
    # Settings schemas
    "GlobalConfig",
    "Mode",
    "ProfileConfig",
    "RunConfig",
    "TemperatureSettings",
]
