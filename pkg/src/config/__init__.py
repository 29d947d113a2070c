"""
Configuration Package

Layered configuration loading and validation.
"""

from .config_manager import ConfigManager, get
from .validator import ConfigValidator, ValidationError

__all__ = [
    'ConfigManager',
    'ConfigValidator',
    'ValidationError',
    'get'
]
