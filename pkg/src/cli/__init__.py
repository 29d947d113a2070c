"""
CLI Package

One module per subcommand; src/main.py combines them.
"""

from .catalog import catalog_cli, run_catalog
from .common import CliConfig, build_cli_config
from .diagram import diagram_cli, run_diagram
from .involution import involution_cli, run_involution
from .verify import run_verify, verify_cli

__all__ = [
    'CliConfig',
    'build_cli_config',
    'catalog_cli',
    'diagram_cli',
    'involution_cli',
    'verify_cli',
    'run_catalog',
    'run_diagram',
    'run_involution',
    'run_verify'
]
