"""
Shared CLI Plumbing

Options common to every subcommand, the resolved CliConfig and the
configuration/logging bootstrap each command runs before doing work.
"""

import argparse
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from config.config_manager import ConfigManager, get
from utils.error_handler import UsageError
from utils.logger import setup_logging_from_config
from utils.performance_monitor import get_performance_monitor

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("text", "json")

# bare --seed
SEED_FROM_CONFIG = object()


@dataclass
class CliConfig:
    """
    Effective settings of one command invocation.

    Attributes:
        subcommand: verify, involution, diagram or catalog
        case_id: Case selector for verify
        order: Truncation order
        max_n: Sweep bound for involution, size for catalog
        parts: Partition literal for diagram
        style: Diagram style
        output_format: text or json
        seed: Seed for the randomized self-check, if requested (bare --seed reads random.seed)
        settings: The merged configuration dictionary
    """
    subcommand: str
    case_id: Optional[str] = None
    order: Optional[int] = None
    max_n: Optional[int] = None
    parts: Optional[str] = None
    style: Optional[str] = None
    output_format: str = "text"
    seed: Optional[int] = None
    settings: Dict[str, Any] = field(default_factory=dict)

    @property
    def max_order(self) -> int:
        return get(self.settings, "limits.max_order", 200)

    @property
    def max_size(self) -> int:
        return get(self.settings, "limits.max_n", 60)

    def require_order(self, order: int) -> int:
        """Guard against runaway enumeration."""
        if order < 0:
            raise UsageError(f"order must be non-negative, got {order}")
        if order > self.max_order:
            raise UsageError(f"order {order} exceeds the limit {self.max_order} "
                             f"(raise it with QPART_MAX_ORDER)")
        return order

    def require_size(self, n: int) -> int:
        if n < 0:
            raise UsageError(f"size must be non-negative, got {n}")
        if n > self.max_size:
            raise UsageError(f"size {n} exceeds the limit {self.max_size}")
        return n


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    """Options shared by every subcommand."""
    parser.add_argument(
        '--format',
        choices=OUTPUT_FORMATS,
        help='Output format (default from configuration: text)'
    )
    parser.add_argument(
        '--profile',
        type=str,
        help='Configuration profile under src/config/profiles'
    )
    parser.add_argument(
        '--verbose', '-v',
        action='store_true',
        help='Enable debug logging'
    )
    parser.add_argument(
        '--log-level',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        help='Logging level (overrides configuration)'
    )
    parser.add_argument(
        '--log-file',
        type=str,
        help='Also write JSON log records to this file'
    )


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    overrides: Dict[str, Any] = {}
    if getattr(args, 'format', None):
        overrides['output'] = {'format': args.format}
    if getattr(args, 'log_level', None):
        overrides['logging'] = {'level': args.log_level}
    if getattr(args, 'workers', None) is not None:
        overrides.setdefault('verification', {})['workers'] = args.workers
    return overrides


def _resolve_seed(seed: Any, settings: Dict[str, Any]) -> Optional[int]:
    if seed is SEED_FROM_CONFIG:
        return get(settings, 'random.seed')
    return seed


def build_cli_config(subcommand: str, args: argparse.Namespace,
                     manager: Optional[ConfigManager] = None) -> CliConfig:
    """
    Merge configuration layers with the parsed arguments and set up logging.

    Raises:
        ConfigurationError: Unknown profile or invalid merged configuration
    """
    manager = manager or ConfigManager()
    settings = manager.load_config(getattr(args, 'profile', None), _overrides(args))
    enhanced = setup_logging_from_config(settings, verbose=getattr(args, 'verbose', False),
                                         log_file=getattr(args, 'log_file', None))
    enhanced.set_context(case=getattr(args, 'case', None) or "",
                         order=getattr(args, 'order', None),
                         involution=getattr(args, 'name', None) or "")

    return CliConfig(
        subcommand=subcommand,
        case_id=getattr(args, 'case', None),
        order=getattr(args, 'order', None),
        max_n=getattr(args, 'max_n', None),
        parts=getattr(args, 'parts', None),
        style=getattr(args, 'style', None),
        output_format=get(settings, 'output.format', 'text'),
        seed=_resolve_seed(getattr(args, 'seed', None), settings),
        settings=settings,
    )


def emit(text: str) -> None:
    """Reports go to stdout; logs stay on stderr."""
    print(text, flush=True)


def log_performance() -> None:
    summary = get_performance_monitor().get_performance_summary()
    logger.debug(f"finished in {summary['total_seconds']:.2f}s, "
                 f"peak rss {summary['peak_rss_mb']:.1f} MB")
