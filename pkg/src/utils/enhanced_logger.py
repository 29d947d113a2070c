"""
Enhanced Logging System

Structured logging for verification runs: colored console output on stderr,
optional rotating JSON log files, a per-run context (case, order, involution)
and a small metrics recorder for timings and counts.
"""

import functools
import json
import logging
import logging.handlers
import sys
import threading
import time
import uuid
from dataclasses import asdict, dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional

import colorlog


@dataclass
class LogContext:
    """Context information for structured logging."""
    case: str = ""
    order: Optional[int] = None
    involution: str = ""
    run_id: str = field(default_factory=lambda: uuid.uuid4().hex[:12])


_RESERVED_ATTRS = frozenset([
    'name', 'msg', 'args', 'levelname', 'levelno', 'pathname', 'filename',
    'module', 'exc_info', 'exc_text', 'stack_info', 'lineno', 'funcName',
    'created', 'msecs', 'relativeCreated', 'thread', 'threadName',
    'processName', 'process', 'getMessage', 'context', 'taskName', 'message',
])


class StructuredFormatter(logging.Formatter):
    """Formatter that renders each record as one JSON object."""

    def format(self, record):
        log_entry = {
            'timestamp': datetime.fromtimestamp(record.created).isoformat(),
            'level': record.levelname,
            'logger': record.name,
            'message': record.getMessage(),
            'module': record.module,
            'function': record.funcName,
            'line': record.lineno,
        }

        context = getattr(record, 'context', None)
        if context:
            log_entry['context'] = asdict(context)

        if record.exc_info:
            log_entry['exception'] = self.formatException(record.exc_info)

        for key, value in record.__dict__.items():
            if key not in _RESERVED_ATTRS:
                log_entry[key] = value

        return json.dumps(log_entry, default=str)


class PerformanceLogger:
    """Records named metrics (durations, counts) and logs them at DEBUG."""

    def __init__(self, logger_name: str = "qpart.performance"):
        self.logger = logging.getLogger(logger_name)
        self.metrics: Dict[str, Dict[str, Any]] = {}
        self.lock = threading.Lock()

    def log_metric(self, metric_name: str, value: float, context: Optional[LogContext] = None):
        """Log a performance metric."""
        with self.lock:
            self.metrics[metric_name] = {
                'value': value,
                'timestamp': datetime.now().isoformat(),
                'context': asdict(context) if context else None
            }
        self.logger.debug(f"Metric: {metric_name} = {value}", extra={'context': context})

    def get_metrics_summary(self) -> Dict[str, Any]:
        """Get summary of all logged metrics."""
        with self.lock:
            return self.metrics.copy()


class VerificationLogger:
    """Specialized logger for verification events."""

    def __init__(self, name: str = "qpart.verification"):
        self.logger = logging.getLogger(name)
        self.performance_logger = PerformanceLogger(f"{name}.performance")

    def log_route(self, case: str, route: str, order: int, seconds: float,
                  context: Optional[LogContext] = None):
        """Log completion of one computation route."""
        self.logger.info(
            f"Route: case {case} {route} to q^{order} in {seconds:.3f}s",
            extra={'context': context}
        )
        self.performance_logger.log_metric(f"{case}.{route}.seconds", seconds, context)

    def log_mismatch(self, case: str, left: str, right: str, exponent: int,
                     left_value: int, right_value: int,
                     context: Optional[LogContext] = None):
        """Log the first disagreement between two routes."""
        self.logger.error(
            f"Mismatch: case {case} {left} vs {right} at q^{exponent}: "
            f"{left_value} != {right_value}",
            extra={'context': context}
        )

    def log_sweep(self, involution: str, max_n: int, checked: int, violations: int,
                  context: Optional[LogContext] = None):
        """Log the result of an involution sweep."""
        level = logging.INFO if violations == 0 else logging.ERROR
        self.logger.log(
            level,
            f"Sweep: {involution} up to N={max_n}, {checked} partitions, {violations} violations",
            extra={'context': context}
        )

    def log_catalog(self, n: int, left: int, right: int,
                    context: Optional[LogContext] = None):
        """Log catalog totals for one size."""
        self.logger.info(
            f"Catalog: N={n} weighted totals {left} and {right}",
            extra={'context': context}
        )


class _ContextFilter(logging.Filter):
    """Attaches the run context to records that do not carry one."""

    def __init__(self, owner: "EnhancedLogger"):
        super().__init__()
        self.owner = owner

    def filter(self, record):
        if getattr(record, 'context', None) is None:
            record.context = self.owner.get_context()
        return True


class EnhancedLogger:
    """Root logging setup: console on stderr, optional JSON file, run context."""

    def __init__(self, name: str = "qpart",
                 log_level: str = "INFO",
                 log_file: Optional[str] = None,
                 use_colors: bool = True):
        self.name = name
        self.log_level = getattr(logging, str(log_level).upper())
        self.log_file = Path(log_file) if log_file else None
        self.use_colors = use_colors

        self._context = LogContext()
        self._context_lock = threading.Lock()
        self.main_logger = self._setup_main_logger()

    def _setup_main_logger(self) -> logging.Logger:
        """Configure the root logger so every module logger propagates here."""
        root = logging.getLogger()
        root.setLevel(self.log_level)
        for handler in list(root.handlers):
            if getattr(handler, '_qpart_handler', False):
                root.removeHandler(handler)
                handler.close()

        # stdout carries reports only
        console_handler = logging.StreamHandler(sys.stderr)
        if self.use_colors:
            console_formatter = colorlog.ColoredFormatter(
                '%(log_color)s%(asctime)s - %(name)s - %(levelname)s - %(message)s',
                datefmt='%Y-%m-%d %H:%M:%S',
                log_colors={
                    'DEBUG': 'cyan',
                    'INFO': 'green',
                    'WARNING': 'yellow',
                    'ERROR': 'red',
                    'CRITICAL': 'red,bg_white'
                }
            )
        else:
            console_formatter = logging.Formatter(
                '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
                datefmt='%Y-%m-%d %H:%M:%S'
            )
        console_handler.setFormatter(console_formatter)
        console_handler._qpart_handler = True
        root.addHandler(console_handler)

        if self.log_file is not None:
            self.log_file.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.handlers.RotatingFileHandler(
                self.log_file,
                maxBytes=10 * 1024 * 1024,
                backupCount=5
            )
            file_handler.setFormatter(StructuredFormatter())
            file_handler.addFilter(_ContextFilter(self))
            file_handler._qpart_handler = True
            root.addHandler(file_handler)

        return logging.getLogger(self.name)

    def set_context(self, **kwargs):
        """Set logging context."""
        with self._context_lock:
            for key, value in kwargs.items():
                if hasattr(self._context, key):
                    setattr(self._context, key, value)

    def clear_context(self):
        """Clear logging context."""
        with self._context_lock:
            self._context = LogContext()

    def get_context(self) -> LogContext:
        """Get current logging context."""
        with self._context_lock:
            return self._context


def setup_logging(log_level: str = "INFO", log_file: Optional[str] = None,
                  use_colors: bool = True) -> EnhancedLogger:
    """Replace the qpart handlers on the root logger."""
    return EnhancedLogger(log_level=log_level, log_file=log_file, use_colors=use_colors)


def log_function_calls(func):
    """Decorator that logs entry, duration and failure of a function at DEBUG."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        logger = logging.getLogger(func.__module__)
        logger.debug(f"Calling {func.__name__}")
        start = time.perf_counter()
        try:
            result = func(*args, **kwargs)
        except Exception as e:
            logger.debug(f"{func.__name__} failed with error: {e}")
            raise
        logger.debug(f"{func.__name__} completed in {time.perf_counter() - start:.4f}s")
        return result
    return wrapper
