"""Configuration management for the Artin groups engine."""

import os
import yaml
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple
from dotenv import load_dotenv

# environment variable -> (dotted key, cast)
ENV_OVERRIDES: Dict[str, Tuple[str, Callable[[str], Any]]] = {
    "ARTIN_MAX_DEGREE": ("field.max_degree", int),
    "ARTIN_SEED": ("verify.seed", int),
    "LOG_LEVEL": ("logging.level", str),
    "LOG_FILE": ("logging.file", str),
}


class Config:
    """Configuration manager that loads from YAML and environment variables."""

    def __init__(self, config_path: Optional[str] = None):
        """Initialize configuration.

        Args:
            config_path: Path to config.yaml file. Defaults to ./config.yaml
        """
        # Load environment variables
        load_dotenv()

        if config_path is None:
            config_path = os.getenv('ARTIN_CONFIG') or Path.cwd() / "config.yaml"

        self.config_path = Path(config_path)
        self._config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from YAML file with environment variable overrides."""
        config = {}

        if self.config_path.exists():
            with open(self.config_path, 'r', encoding='utf-8') as f:
                config = yaml.safe_load(f) or {}

        config = self._apply_env_overrides(config)

        return config

    def reload(self, config_path: Optional[str] = None) -> None:
        """Re-read configuration, optionally from a different file.

        Args:
            config_path: New path to config.yaml
        """
        if config_path is not None:
            self.config_path = Path(config_path)
        self._config = self._load_config()

    def _apply_env_overrides(self, config: Dict[str, Any]) -> Dict[str, Any]:
        """Apply environment variable overrides to config."""
        for env_name, (key, cast) in ENV_OVERRIDES.items():
            raw = os.getenv(env_name)
            if not raw:
                continue
            try:
                value = cast(raw)
            except ValueError:
                raise ValueError(f"{env_name}={raw!r} is not a valid value for {key}") from None
            section, name = key.split(".")
            config.setdefault(section, {})[name] = value

        return config

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value by dot-notation key.

        Args:
            key: Configuration key in dot notation (e.g., 'field.max_degree')
            default: Default value if key not found

        Returns:
            Configuration value or default
        """
        keys = key.split('.')
        value = self._config

        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    def set(self, key: str, value: Any) -> None:
        """Set configuration value by dot-notation key.

        Args:
            key: Configuration key in dot notation
            value: Value to set
        """
        keys = key.split('.')
        config = self._config

        for k in keys[:-1]:
            if k not in config:
                config[k] = {}
            config = config[k]

        config[keys[-1]] = value

    def save(self) -> None:
        """Save current configuration to YAML file."""
        self.config_path.parent.mkdir(parents=True, exist_ok=True)

        with open(self.config_path, 'w', encoding='utf-8') as f:
            yaml.dump(self._config, f, default_flow_style=False, indent=2)

    @property
    def max_field_degree(self) -> int:
        """Largest degree of Q(2cos(pi/M)) a graph may require."""
        return int(self.get('field.max_degree', 64))

    @property
    def verify_seed(self) -> int:
        """Default random seed of the verification suites."""
        return int(self.get('verify.seed', 20240607))

    @property
    def charney_samples(self) -> int:
        """Random words per type in the Charney suite."""
        return int(self.get('verify.charney_samples', 1000))

    @property
    def charney_max_length(self) -> int:
        """Maximal length of the random words in the Charney suite."""
        return int(self.get('verify.charney_max_length', 20))

    @property
    def parabolic_samples(self) -> int:
        """Random words per proper generator subset in the parabolic checks."""
        return int(self.get('verify.parabolic_samples', 100))

    @property
    def monoid_max_length(self) -> int:
        """Word length bound of the exhaustive monoid checks."""
        return int(self.get('verify.monoid_max_length', 6))

    @property
    def cancellation_samples(self) -> int:
        """Random triples in the cancellativity spot checks."""
        return int(self.get('verify.cancellation_samples', 200))

    @property
    def log_level(self) -> str:
        """Logging level name."""
        return self.get('logging.level', 'WARNING')

    @property
    def log_file(self) -> Optional[str]:
        """Optional log file path."""
        return self.get('logging.file')


# Global config instance
config = Config()
