"""
Unified logging utilities for the q-series verifier.

Every command configures logging once through setup_logging_from_config;
library modules only call logging.getLogger(__name__).
"""

from typing import Any, Dict, Optional

from .enhanced_logger import EnhancedLogger, setup_logging

VALID_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


def get_log_level_from_config(config: Dict[str, Any], verbose: bool = False) -> str:
    """
    Extract log level from configuration dictionary.

    Args:
        config: Configuration dictionary
        verbose: Force DEBUG regardless of configuration

    Returns:
        Log level string
    """
    if verbose:
        return 'DEBUG'

    log_level = str(config.get('logging', {}).get('level') or 'INFO').upper()
    if log_level not in VALID_LEVELS:
        return 'INFO'
    return log_level


def setup_logging_from_config(
    config: Dict[str, Any],
    verbose: bool = False,
    log_file: Optional[str] = None
) -> EnhancedLogger:
    """
    Set up logging based on configuration dictionary.

    Args:
        config: Configuration dictionary
        verbose: Use DEBUG level
        log_file: Overrides ``logging.file`` from the configuration

    Returns:
        The configured EnhancedLogger
    """
    logging_config = config.get('logging', {})
    level = get_log_level_from_config(config, verbose)
    target = log_file or logging_config.get('file')
    use_colors = bool(logging_config.get('colors', True))
    return setup_logging(level, target, use_colors)
