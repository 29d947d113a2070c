"""
Error Handling

Exception hierarchy for the verifier and the handler used by the command-line
frontends to log failures and turn them into exit codes.
"""

import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Optional


class ErrorSeverity(Enum):
    """Error severity levels."""
    LOW = "low"
    MEDIUM = "medium"
    HIGH = "high"
    CRITICAL = "critical"


@dataclass
class ErrorContext:
    """Context information for error handling."""
    component: str
    operation: str
    case_id: Optional[str] = None
    order: Optional[int] = None
    additional_data: Optional[Dict[str, Any]] = None


class QPartError(Exception):
    """Base exception for all verifier errors."""

    exit_code = 1

    def __init__(self, message: str, severity: ErrorSeverity = ErrorSeverity.MEDIUM,
                 context: Optional[ErrorContext] = None):
        super().__init__(message)
        self.message = message
        self.severity = severity
        self.context = context
        self.timestamp = time.time()


class SeriesError(QPartError):
    """Truncated power series errors."""
    pass


class OrderMismatchError(SeriesError):
    """Two series of different truncation orders were combined."""
    pass


class SeriesOverflowError(SeriesError):
    """A coefficient left the signed 64-bit range."""

    def __init__(self, message: str, exponent: Optional[int] = None,
                 value: Optional[int] = None, **kwargs):
        super().__init__(message, severity=kwargs.pop("severity", ErrorSeverity.HIGH), **kwargs)
        self.exponent = exponent
        self.value = value


class NonUnitError(SeriesError):
    """Inversion of a series whose constant term is not +1 or -1."""
    pass


class ValuationContractError(SeriesError):
    """A factor or term violated its declared q-adic valuation."""
    pass


class PartitionError(QPartError):
    """Invalid partition data."""

    exit_code = 2


class FamilyViolationError(PartitionError):
    """A partition is not a member of the family an operation requires."""
    pass


class DiagramError(QPartError):
    """A 2/1 diagram violates its style invariants."""

    exit_code = 2


class InvolutionError(QPartError):
    """Errors raised by the pairing maps."""
    pass


class ExceptionalPartitionError(InvolutionError):
    """An involution was applied to an exceptional (unpaired) partition."""
    pass


class GuardViolationError(InvolutionError):
    """A neighbour move was requested outside its guard."""
    pass


class ConfigurationError(QPartError):
    """Configuration errors."""

    exit_code = 2


class UsageError(QPartError):
    """Invalid command-line input."""

    exit_code = 2


class ErrorHandler:
    """Logs errors by severity, keeps per-component counts and maps errors to exit codes."""

    def __init__(self, logger: Optional[logging.Logger] = None):
        self.logger = logger or logging.getLogger(__name__)
        self.error_counts: Dict[str, int] = {}

    def handle_error(self, error: Exception, context: Optional[ErrorContext] = None) -> int:
        """
        Log an error and return the process exit code it maps to.

        Args:
            error: The exception to handle
            context: Additional context information

        Returns:
            Exit code (2 for input errors, 1 otherwise)
        """
        component = context.component if context else 'unknown'
        error_key = f"{component}:{type(error).__name__}"
        self.error_counts[error_key] = self.error_counts.get(error_key, 0) + 1

        self._log_error(error, context)

        if isinstance(error, QPartError):
            return error.exit_code
        return 1

    def _log_error(self, error: Exception, context: Optional[ErrorContext]):
        """Log error with appropriate level based on severity."""
        where = context.component if context else 'unknown'
        if context and context.operation:
            where = f"{where}.{context.operation}"
        error_msg = f"Error in {where}: {error}"

        if isinstance(error, QPartError):
            if error.severity == ErrorSeverity.CRITICAL:
                self.logger.critical(error_msg, exc_info=True)
            elif error.severity == ErrorSeverity.HIGH:
                self.logger.error(error_msg)
            elif error.severity == ErrorSeverity.MEDIUM:
                self.logger.warning(error_msg)
            else:
                self.logger.info(error_msg)
        else:
            self.logger.error(error_msg, exc_info=True)

    def get_error_summary(self) -> Dict[str, Any]:
        """Get summary of error counts."""
        return {
            'error_counts': self.error_counts.copy(),
            'total_errors': sum(self.error_counts.values())
        }


@contextmanager
def error_context(component: str, operation: str, handler: Optional[ErrorHandler] = None):
    """
    Context manager for CLI operations.

    Yields a mutable dict; on failure the handler logs the error and the
    computed exit code is stored under ``exit_code`` before re-raising as
    SystemExit.
    """
    handler = handler or get_error_handler()
    context = ErrorContext(component=component, operation=operation)
    outcome: Dict[str, Any] = {'exit_code': 0}
    try:
        yield outcome
    except KeyboardInterrupt:
        handler.logger.info("Operation cancelled by user")
        raise SystemExit(130)
    except QPartError as e:
        if e.context is None:
            e.context = context
        outcome['exit_code'] = handler.handle_error(e, context)
        raise SystemExit(outcome['exit_code'])


# Global error handler instance
_global_error_handler: Optional[ErrorHandler] = None


def get_error_handler() -> ErrorHandler:
    """Get global error handler instance."""
    global _global_error_handler
    if _global_error_handler is None:
        _global_error_handler = ErrorHandler(logging.getLogger("qpart.error"))
    return _global_error_handler
