"""
Utilities Package

Logging, error handling and performance measurement shared by every command.
"""

from .logger import (
    get_log_level_from_config,
    setup_logging_from_config
)

from .error_handler import (
    QPartError,
    ErrorHandler,
    ErrorContext,
    ErrorSeverity,
    error_context,
    get_error_handler
)

from .performance_monitor import PerformanceMonitor, get_performance_monitor

__all__ = [
    # Logging utilities
    'get_log_level_from_config',
    'setup_logging_from_config',

    # Error handling
    'QPartError',
    'ErrorHandler',
    'ErrorContext',
    'ErrorSeverity',
    'error_context',
    'get_error_handler',

    # Performance
    'PerformanceMonitor',
    'get_performance_monitor'
]
