"""
Catalog Command

Lists both sides of the rank identity at one size: distinct-part partitions
weighted by ceil(rank/2) and partitions with exactly one repeated part.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from cli.common import CliConfig, add_common_arguments, build_cli_config, emit
from utils.error_handler import error_context
from verification.mocktheta import catalog, catalog_totals, format_catalog

logger = logging.getLogger(__name__)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--n',
        dest='max_n',
        type=int,
        required=True,
        help='Partition size'
    )
    add_common_arguments(parser)


def run_catalog(cli: CliConfig) -> int:
    """
    Print the catalog for one size. JSON output is one line per entry
    followed by a totals line.

    Returns:
        0 when both sides have the same total, 1 otherwise
    """
    n = cli.require_size(cli.max_n if cli.max_n is not None else 0)
    entries = catalog(n)
    left, right = catalog_totals(entries)

    if cli.output_format == "json":
        for entry in entries:
            emit(json.dumps(entry.to_dict(), ensure_ascii=False))
        emit(json.dumps({"n": n, "left_total": left, "right_total": right, "equal": left == right}))
    else:
        emit(format_catalog(n, entries))
    return 0 if left == right else 1


def catalog_cli(argv: Optional[List[str]] = None) -> int:
    """Standalone entry point: python src/cli/catalog.py --n 8."""
    parser = argparse.ArgumentParser(
        description="Catalog both sides of the rank identity",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_arguments(parser)
    args = parser.parse_args(argv)
    with error_context("cli", "catalog"):
        cli = build_cli_config("catalog", args)
        return run_catalog(cli)


def main():
    sys.exit(catalog_cli())


if __name__ == "__main__":
    main()
