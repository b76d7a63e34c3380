import os
import yaml
from pathlib import Path
from typing import Any, Dict, Optional
from dotenv import load_dotenv

from .errors import ConfigurationError

DICTIONARY_BACKENDS = ("hash", "ordered")
TRAVERSAL_ORDERS = ("bfs", "dfs")

_TRUE_VALUES = {"1", "true", "yes", "on"}
_FALSE_VALUES = {"0", "false", "no", "off"}


class Config:
    """Configuration manager for enumeration, verification and benchmarking."""

    def __init__(self, config_path: Optional[str] = None, env_path: Optional[str] = None):
        """
        Initialize configuration.

        Args:
            config_path: Path to YAML config file. Defaults to config/config.yaml
            env_path: Path to .env file. Defaults to config/.env
        """
        self.project_root = Path(__file__).parent.parent.parent

        if env_path is None:
            env_path = self.project_root / "config" / ".env"
        load_dotenv(env_path)

        if config_path is None:
            config_path = self.project_root / "config" / "config.yaml"

        self.config_data = self._load_yaml(config_path)

    def _load_yaml(self, config_path: Path) -> Dict[str, Any]:
        """Load YAML configuration file."""
        if not Path(config_path).exists():
            return {}

        with open(config_path, 'r') as f:
            return yaml.safe_load(f) or {}

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value by dot-notation key.

        Args:
            key: Configuration key in dot notation (e.g., 'enumeration.traversal')
            default: Default value if key not found

        Returns:
            Configuration value
        """
        keys = key.split('.')
        value = self.config_data

        for k in keys:
            if isinstance(value, dict):
                value = value.get(k)
            else:
                return default

        return value if value is not None else default

    def _setting(self, env_name: str, key: str, default: Any) -> Any:
        """Environment variable first, then YAML key, then default."""
        value = os.getenv(env_name)
        if value is not None and value != "":
            return value
        return self.get(key, default)

    def _int_setting(self, env_name: str, key: str, default: int, minimum: int = 0) -> int:
        raw = self._setting(env_name, key, default)
        try:
            value = int(raw)
        except (TypeError, ValueError):
            raise ConfigurationError(f"{env_name}/{key} must be an integer, got {raw!r}")
        if value < minimum:
            raise ConfigurationError(f"{env_name}/{key} must be >= {minimum}, got {value}")
        return value

    def _bool_setting(self, env_name: str, key: str, default: bool) -> bool:
        raw = self._setting(env_name, key, default)
        if isinstance(raw, bool):
            return raw
        text = str(raw).strip().lower()
        if text in _TRUE_VALUES:
            return True
        if text in _FALSE_VALUES:
            return False
        raise ConfigurationError(f"{env_name}/{key} must be a boolean, got {raw!r}")

    def _choice_setting(self, env_name: str, key: str, default: str, choices: tuple) -> str:
        value = str(self._setting(env_name, key, default)).strip().lower()
        if value not in choices:
            raise ConfigurationError(f"{env_name}/{key} must be one of {choices}, got {value!r}")
        return value

    # Logging configuration
    @property
    def log_level(self) -> str:
        return str(self._setting("LOG_LEVEL", "logging.level", "INFO")).upper()

    @property
    def json_logs(self) -> bool:
        return self._bool_setting("JSON_LOGS", "logging.json", False)

    # Enumeration configuration
    @property
    def max_dict_entries(self) -> int:
        """Solution dictionary cap; 0 disables the cap."""
        return self._int_setting("ENUM_MAX_DICT", "enumeration.max_dict_entries", 5_000_000)

    @property
    def dictionary_backend(self) -> str:
        return self._choice_setting(
            "ENUM_DICTIONARY", "enumeration.dictionary", "hash", DICTIONARY_BACKENDS
        )

    @property
    def traversal(self) -> str:
        return self._choice_setting(
            "ENUM_TRAVERSAL", "enumeration.traversal", "bfs", TRAVERSAL_ORDERS
        )

    @property
    def flush_output(self) -> bool:
        return self._bool_setting("ENUM_FLUSH", "output.flush", True)

    # Verification configuration
    @property
    def oracle_max_n(self) -> int:
        return self._int_setting("ORACLE_MAX_N", "verification.oracle_max_n", 20, minimum=1)

    # Benchmark configuration
    @property
    def bench_repeat(self) -> int:
        return self._int_setting("BENCH_REPEAT", "benchmark.repeat", 1, minimum=1)
