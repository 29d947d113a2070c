#!/usr/bin/env python3
"""
Main entry point for the qpart CLI.

Subcommands verify the partition identities, sweep the involutions, render
2/1 diagrams and catalog the rank identity. Exit status: 0 when every check
passed, 1 on a mismatch or computational failure, 2 on invalid input.
"""

import sys
import argparse
import logging
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent))

from cli import catalog, diagram, involution, verify
from cli.common import build_cli_config
from utils.error_handler import error_context

COMMANDS = {
    'verify': verify,
    'involution': involution,
    'diagram': diagram,
    'catalog': catalog,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpart",
        description="qpart - exact q-series identity verifier",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Verify one identity row to q^60
  python src/main.py verify --case iii --order 60

  # All six rows in three processes, JSON output
  python src/main.py verify --case all --workers 3 --format json

  # Doubled mock theta identity and the rank identity
  python src/main.py verify --case mock9 --order 50
  python src/main.py verify --case rank --order 40

  # Sweep an involution
  python src/main.py involution --name franklin --max-n 40

  # Render a diagram and list the rank catalog
  python src/main.py diagram --parts 8,7,5,4,4,3,2,2,2,1 --style odd
  python src/main.py catalog --n 8
        """
    )
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    helps = {
        'verify': 'Verify identities by independent routes',
        'involution': 'Sweep an involution exhaustively',
        'diagram': 'Render the 2/1 diagram of a partition',
        'catalog': 'Catalog both sides of the rank identity',
    }
    for name, module in COMMANDS.items():
        sub = subparsers.add_parser(name, help=helps[name],
                                    formatter_class=argparse.RawDescriptionHelpFormatter)
        module.add_arguments(sub)
    return parser


def run(args: argparse.Namespace) -> int:
    cli = build_cli_config(args.command, args)
    logging.getLogger(__name__).debug(f"Executing command: {args.command}")
    if args.command == 'verify':
        return verify.run_verify(cli, include_subset=False if args.no_subset else None)
    if args.command == 'involution':
        return involution.run_involution(cli, args.name)
    if args.command == 'diagram':
        return diagram.run_diagram(cli, args.conjugate)
    return catalog.run_catalog(cli)


def main():
    """Main CLI entry point."""
    args = build_parser().parse_args()
    with error_context("cli", args.command):
        code = run(args)
    sys.exit(code)


if __name__ == "__main__":
    main()
