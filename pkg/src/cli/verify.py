"""
Verify Command

Runs the identity verifications: one row of the six-case table, all six,
the doubled mock theta identity ("mock9") or the rank identity ("rank").
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from cli.common import (
    SEED_FROM_CONFIG,
    CliConfig,
    add_common_arguments,
    build_cli_config,
    emit,
    log_performance,
)
from config.config_manager import get
from utils.error_handler import UsageError, error_context
from utils.performance_monitor import get_performance_monitor
from verification.case_specs import CaseId
from verification.identities import verify, verify_all
from verification.mocktheta import verify_identity9, verify_rank
from verification.reports import VerificationReport, reports_to_json, summary_table
from verification.selfcheck import run_selfcheck

logger = logging.getLogger(__name__)

SELECTORS = [c.value for c in CaseId] + ["all", "mock9", "rank"]


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--case',
        type=str,
        default='all',
        help=f"Case selector: {', '.join(SELECTORS)} (default: all)"
    )
    parser.add_argument(
        '--order',
        type=int,
        help='Truncation order (default from configuration)'
    )
    parser.add_argument(
        '--seed',
        type=int,
        nargs='?',
        const=SEED_FROM_CONFIG,
        help='Run the randomized arithmetic self-check first (bare --seed uses random.seed)'
    )
    parser.add_argument(
        '--workers',
        type=int,
        help='Worker processes for --case all'
    )
    parser.add_argument(
        '--no-subset',
        action='store_true',
        help='Skip the subset-expansion route'
    )
    add_common_arguments(parser)


def _resolve_order(cli: CliConfig, selector: str) -> int:
    if cli.order is not None:
        return cli.require_order(cli.order)
    if selector == "mock9":
        default = get(cli.settings, "mocktheta.identity_order")
    elif selector == "rank":
        default = get(cli.settings, "mocktheta.rank_order")
    else:
        default = None
    if default is None:
        default = get(cli.settings, "verification.order", 60)
    return cli.require_order(default)


def run_verify(cli: CliConfig, include_subset: Optional[bool] = None) -> int:
    """
    Run the selected verifications and print their reports.

    Returns:
        0 if every report passed, 1 otherwise

    Raises:
        UsageError: Unknown selector or order beyond the limit
    """
    selector = (cli.case_id or "all").strip().lower()
    if selector not in SELECTORS:
        raise UsageError(f"unknown case {cli.case_id!r}; choose from {', '.join(SELECTORS)}")
    order = _resolve_order(cli, selector)
    if include_subset is None:
        include_subset = bool(get(cli.settings, "verification.include_subset", True))

    selfcheck = None
    if cli.seed is not None:
        trials = get(cli.settings, "random.trials", 25)
        selfcheck = run_selfcheck(cli.seed, trials)

    monitor = get_performance_monitor()
    with monitor.measure(f"verify {selector} to q^{order}"):
        if selector == "all":
            workers = get(cli.settings, "verification.workers", 1)
            reports: List[VerificationReport] = verify_all(order, workers, include_subset)
        elif selector == "mock9":
            reports = [verify_identity9(order)]
        elif selector == "rank":
            reports = [verify_rank(order)]
        else:
            reports = [verify(selector, order, include_subset)]

    for report in reports:
        report.selfcheck = selfcheck

    if cli.output_format == "json":
        emit(reports[0].to_json() if len(reports) == 1 else reports_to_json(reports))
    else:
        emit("\n\n".join(r.format_text() for r in reports))
        if len(reports) > 1:
            emit("")
            emit(summary_table(reports))

    log_performance()
    return 0 if all(r.passed for r in reports) else 1


def verify_cli(argv: Optional[List[str]] = None) -> int:
    """Standalone entry point: python src/cli/verify.py --case iv --order 60."""
    parser = argparse.ArgumentParser(
        description="Verify the partition identities by independent routes",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_arguments(parser)
    args = parser.parse_args(argv)
    with error_context("cli", "verify"):
        cli = build_cli_config("verify", args)
        return run_verify(cli, include_subset=False if args.no_subset else None)


def main():
    sys.exit(verify_cli())


if __name__ == "__main__":
    main()
