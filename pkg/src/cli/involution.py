"""
Involution Command

Exhaustive property sweeps of the sign-reversing involutions up to a size
bound, with violations listed and path statistics for the neighbour graph.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from cli.common import CliConfig, add_common_arguments, build_cli_config, emit, log_performance
from combinatorics.sweeps import SWEEPS, SweepReport, run_sweep
from config.config_manager import get
from utils.error_handler import error_context
from utils.performance_monitor import get_performance_monitor
from verification.reports import format_sweep

logger = logging.getLogger(__name__)

NAMES = list(SWEEPS) + ["all"]


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--name',
        choices=NAMES,
        required=True,
        help='Involution to sweep'
    )
    parser.add_argument(
        '--max-n',
        type=int,
        help='Largest partition size to check (default from configuration)'
    )
    add_common_arguments(parser)


def _bound(cli: CliConfig, name: str) -> int:
    if cli.max_n is not None:
        return cli.require_size(cli.max_n)
    bounds = get(cli.settings, "involutions.bounds") or {}
    return cli.require_size(bounds.get(name, get(cli.settings, "involutions.max_n", 30)))


def run_involution(cli: CliConfig, name: str) -> int:
    """
    Sweep one involution (or all four) and print the reports.

    Returns:
        0 when no violation was found, 1 otherwise
    """
    names = list(SWEEPS) if name == "all" else [name]
    monitor = get_performance_monitor()
    reports: List[SweepReport] = []
    for current in names:
        max_n = _bound(cli, current)
        with monitor.measure(f"sweep {current} to N={max_n}"):
            reports.append(run_sweep(current, max_n))

    if cli.output_format == "json":
        payload = reports[0].to_dict() if len(reports) == 1 else [r.to_dict() for r in reports]
        emit(json.dumps(payload))
    else:
        emit("\n\n".join(format_sweep(r) for r in reports))

    log_performance()
    return 0 if all(r.passed for r in reports) else 1


def involution_cli(argv: Optional[List[str]] = None) -> int:
    """Standalone entry point: python src/cli/involution.py --name franklin --max-n 40."""
    parser = argparse.ArgumentParser(
        description="Sweep a sign-reversing involution exhaustively",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_arguments(parser)
    args = parser.parse_args(argv)
    with error_context("cli", "involution"):
        cli = build_cli_config("involution", args)
        return run_involution(cli, args.name)


def main():
    sys.exit(involution_cli())


if __name__ == "__main__":
    main()
