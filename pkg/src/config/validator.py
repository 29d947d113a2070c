"""
Configuration Validator

Structural and range checks for merged verifier configurations.
"""

import json
import logging
import os
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("text", "json")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
INVOLUTION_NAMES = ("franklin", "sigma-odd", "paths", "sigma-even")
REQUIRED_SECTIONS = ("verification", "involutions", "limits", "output", "random", "logging")


@dataclass
class ValidationError:
    """One configuration problem."""
    field: str
    message: str
    severity: str  # 'error', 'warning'
    suggested_value: Optional[Any] = None


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


class ConfigValidator:
    """Configuration validator for the verifier."""

    def __init__(self):
        self.errors: List[ValidationError] = []
        self.warnings: List[ValidationError] = []

    def validate(self, config: Dict[str, Any]) -> Tuple[bool, List[ValidationError]]:
        """Validate a configuration dictionary; returns (is_valid, issues)."""
        self.errors.clear()
        self.warnings.clear()

        self._validate_required_sections(config)
        if not self.errors:
            self._validate_limits(config)
            self._validate_bounds(config)
            self._validate_output(config)
            self._validate_random(config)
            self._validate_logging(config)

        issues = self.errors + self.warnings
        return len(self.errors) == 0, issues

    def _error(self, field: str, message: str, suggested_value: Any = None):
        self.errors.append(ValidationError(field, message, "error", suggested_value))

    def _warning(self, field: str, message: str, suggested_value: Any = None):
        self.warnings.append(ValidationError(field, message, "warning", suggested_value))

    def _validate_required_sections(self, config: Dict[str, Any]):
        for section in REQUIRED_SECTIONS:
            if section not in config:
                self._error(section, f"Required section '{section}' is missing")
            elif not isinstance(config[section], dict):
                self._error(section, f"Section '{section}' must be a mapping")

    def _validate_limits(self, config: Dict[str, Any]):
        limits = config["limits"]
        for key in ("max_order", "max_n"):
            value = limits.get(key)
            if not _is_int(value) or value < 0:
                self._error(f"limits.{key}", f"{key} must be a non-negative integer")

    def _validate_bounds(self, config: Dict[str, Any]):
        limits = config["limits"]
        max_order = limits.get("max_order")
        max_n = limits.get("max_n")

        orders = [("verification.order", config["verification"].get("order"))]
        mocktheta = config.get("mocktheta", {})
        for key in ("identity_order", "rank_order"):
            if key in mocktheta:
                orders.append((f"mocktheta.{key}", mocktheta[key]))
        for field, value in orders:
            if not _is_int(value) or value < 0:
                self._error(field, "order must be a non-negative integer")
            elif _is_int(max_order) and value > max_order:
                # the guard applies to the order a command actually runs at
                self._warning(field, f"order {value} exceeds limits.max_order {max_order}", max_order)

        sizes = [("involutions.max_n", config["involutions"].get("max_n"))]
        for name, value in (config["involutions"].get("bounds") or {}).items():
            if name not in INVOLUTION_NAMES:
                self._warning(f"involutions.bounds.{name}", f"unknown involution '{name}'")
            sizes.append((f"involutions.bounds.{name}", value))
        for field, value in sizes:
            if not _is_int(value) or value < 0:
                self._error(field, "max_n must be a non-negative integer")
            elif _is_int(max_n) and value > max_n:
                self._error(field, f"max_n {value} exceeds limits.max_n {max_n}", max_n)

        workers = config["verification"].get("workers", 1)
        if not _is_int(workers) or workers < 1:
            self._error("verification.workers", "workers must be a positive integer", 1)
        elif workers > (os.cpu_count() or 1):
            self._warning("verification.workers", f"{workers} workers exceed the {os.cpu_count()} available CPUs")

    def _validate_output(self, config: Dict[str, Any]):
        fmt = config["output"].get("format")
        if fmt not in OUTPUT_FORMATS:
            self._error("output.format", f"format must be one of {', '.join(OUTPUT_FORMATS)}", "text")

    def _validate_random(self, config: Dict[str, Any]):
        rng = config["random"]
        if not _is_int(rng.get("seed")) or rng["seed"] < 0:
            self._error("random.seed", "seed must be a non-negative integer")
        if not _is_int(rng.get("trials")) or rng["trials"] < 1:
            self._error("random.trials", "trials must be a positive integer", 25)

    def _validate_logging(self, config: Dict[str, Any]):
        level = str(config["logging"].get("level", "")).upper()
        if level not in LOG_LEVELS:
            self._error("logging.level", f"level must be one of {', '.join(LOG_LEVELS)}", "INFO")

    def validate_file(self, config_path: str) -> Tuple[bool, List[ValidationError]]:
        """Validate a JSON configuration file."""
        if not os.path.exists(config_path):
            return False, [ValidationError("file", f"Configuration file not found: {config_path}", "error")]
        try:
            with open(config_path, "r") as f:
                config = json.load(f)
        except json.JSONDecodeError as e:
            return False, [ValidationError("file", f"Invalid JSON: {e}", "error")]
        return self.validate(config)
