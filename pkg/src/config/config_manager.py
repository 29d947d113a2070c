"""
Configuration Manager

Layered configuration for the verifier: packaged defaults, an optional
named profile (JSON or YAML), environment overrides and finally command-line
overrides, each layer deep-merged over the previous one.
"""

import copy
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from dotenv import load_dotenv

from utils.error_handler import ConfigurationError

from .validator import ConfigValidator

# Environment variable -> (section, key, converter)
ENV_OVERRIDES = {
    "QPART_MAX_ORDER": ("limits", "max_order", int),
    "QPART_LOG_LEVEL": ("logging", "level", str),
}


class ConfigManager:
    """
    Configuration loading and merging.

    Merge order: defaults.json <- profile <- environment <- overrides.
    """

    def __init__(self, config_dir: Optional[str] = None, logger: Optional[logging.Logger] = None,
                 validate_configs: bool = True, use_env: bool = True):
        """
        Initialize the configuration manager.

        Args:
            config_dir: Directory containing defaults.json and profiles/
            logger: Logger instance
            validate_configs: Whether to validate merged configurations
            use_env: Whether to read overrides from the environment (and .env)
        """
        self.logger = logger or logging.getLogger(__name__)
        self.config_dir = Path(config_dir) if config_dir else Path(__file__).parent
        self.validator = ConfigValidator() if validate_configs else None
        self.use_env = use_env
        self._config_cache: Dict[str, Dict[str, Any]] = {}
        self._default_config = self._load_defaults()
        self.logger.debug(f"Configuration directory: {self.config_dir}")

    def _load_defaults(self) -> Dict[str, Any]:
        default_path = self.config_dir / "defaults.json"
        if not default_path.exists():
            raise ConfigurationError(f"default configuration not found: {default_path}")
        try:
            with open(default_path, "r") as f:
                return json.load(f)
        except json.JSONDecodeError as e:
            raise ConfigurationError(f"invalid JSON in {default_path}: {e}") from e

    def _profile_paths(self, profile_name: str) -> List[Path]:
        profiles = self.config_dir / "profiles"
        return [
            profiles / f"{profile_name}.json",
            profiles / f"{profile_name}.yaml",
            profiles / f"{profile_name}.yml",
        ]

    def _load_profile(self, profile_name: str) -> Dict[str, Any]:
        """
        Load a named profile from profiles/.

        Raises:
            ConfigurationError: If no file exists for the profile or it cannot be parsed
        """
        for path in self._profile_paths(profile_name):
            if not path.exists():
                continue
            try:
                with open(path, "r") as f:
                    if path.suffix == ".json":
                        data = json.load(f)
                    else:
                        data = yaml.safe_load(f)
            except (json.JSONDecodeError, yaml.YAMLError) as e:
                raise ConfigurationError(f"cannot parse profile {path}: {e}") from e
            if data is None:
                data = {}
            if not isinstance(data, dict):
                raise ConfigurationError(f"profile {path} must contain a mapping")
            self.logger.debug(f"Profile loaded from: {path}")
            return data

        available = ", ".join(self.get_available_profiles()) or "none"
        raise ConfigurationError(f"unknown profile {profile_name!r} (available: {available})")

    def _env_overrides(self) -> Dict[str, Any]:
        load_dotenv()
        overrides: Dict[str, Any] = {}
        for variable, (section, key, convert) in ENV_OVERRIDES.items():
            raw = os.getenv(variable)
            if raw is None or raw == "":
                continue
            try:
                value = convert(raw)
            except ValueError as e:
                raise ConfigurationError(f"{variable}={raw!r} is not a valid {convert.__name__}") from e
            overrides.setdefault(section, {})[key] = value
            self.logger.debug(f"{variable} overrides {section}.{key}")
        return overrides

    @staticmethod
    def _deep_merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
        result = copy.deepcopy(base)
        for key, value in override.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = ConfigManager._deep_merge(result[key], value)
            else:
                result[key] = copy.deepcopy(value)
        return result

    def load_config(self, profile: Optional[str] = None,
                    overrides: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """
        Build the effective configuration.

        Args:
            profile: Optional profile name under profiles/
            overrides: Nested mapping applied last (command-line values)

        Returns:
            Merged configuration dictionary

        Raises:
            ConfigurationError: On unknown profiles or invalid merged values
        """
        cache_key = profile or ""
        if cache_key in self._config_cache:
            config = self._config_cache[cache_key]
        else:
            config = self.get_default_config()
            if profile:
                config = self._deep_merge(config, self._load_profile(profile))
            if self.use_env:
                config = self._deep_merge(config, self._env_overrides())
            self._config_cache[cache_key] = config

        if overrides:
            config = self._deep_merge(config, overrides)
        else:
            config = copy.deepcopy(config)

        if self.validator:
            is_valid, issues = self.validator.validate(config)
            for issue in issues:
                if issue.severity == "warning":
                    self.logger.warning(f"{issue.field}: {issue.message}")
            if not is_valid:
                errors = "; ".join(f"{i.field}: {i.message}" for i in issues if i.severity == "error")
                raise ConfigurationError(f"invalid configuration: {errors}")
        return config

    def get_available_profiles(self) -> List[str]:
        profiles_dir = self.config_dir / "profiles"
        if not profiles_dir.exists():
            return []
        names = {p.stem for p in profiles_dir.iterdir() if p.suffix in (".json", ".yaml", ".yml")}
        return sorted(names)

    def get_default_config(self) -> Dict[str, Any]:
        return copy.deepcopy(self._default_config)

    def clear_cache(self):
        self._config_cache.clear()
        self.logger.debug("Configuration cache cleared")


def get(config: Dict[str, Any], dotted: str, default: Any = None) -> Any:
    """Look up a dotted key such as 'limits.max_order'."""
    node: Any = config
    for part in dotted.split("."):
        if not isinstance(node, dict) or part not in node:
            return default
        node = node[part]
    return node
