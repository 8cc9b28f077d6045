"""Base configuration loading for pcm-sparsify."""

import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from ..errors import ConfigurationError

DEFAULT_CONFIG_DIR = Path(__file__).parent.parent.parent.parent.parent / "config"


def substitute_env_vars(config: Any) -> Any:
    """Recursively substitute ${VAR} strings from the environment.

    Args:
        config: Parsed YAML value

    Returns:
        The value with placeholders replaced; unknown variables are left as written.
    """
    if isinstance(config, dict):
        return {k: substitute_env_vars(v) for k, v in config.items()}
    elif isinstance(config, list):
        return [substitute_env_vars(v) for v in config]
    elif isinstance(config, str) and config.startswith("${") and config.endswith("}"):
        env_var = config[2:-1]
        return os.getenv(env_var, config)
    return config


class ConfigurationBase:
    """Base class for YAML-backed configuration."""

    def __init__(self, config_dir: Optional[str] = None):
        """Initialize configuration with optional custom directory."""
        load_dotenv()
        if config_dir:
            self.config_dir = Path(config_dir)
        else:
            self.config_dir = DEFAULT_CONFIG_DIR

    def _load_yaml(self, path: Path, default: Optional[Dict] = None) -> Dict:
        """Load a YAML file and substitute environment variables."""
        if not path.exists():
            return default or {}
        try:
            with open(path) as f:
                loaded = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ConfigurationError(f"Invalid YAML in {path}: {e}") from e
        if not isinstance(loaded, dict):
            raise ConfigurationError(f"Top level of {path} must be a mapping")
        return substitute_env_vars(loaded)
