"""
Diagram Command

Renders the 2/1 diagram of a partition in the odd-restricted or
even-restricted style.
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
from combinatorics.diagrams import DiagramStyle, conjugate_diagram, from_odd_diagram, render, to_diagram
from core.partitions import Partition
from utils.error_handler import FamilyViolationError, PartitionError, UsageError, error_context

logger = logging.getLogger(__name__)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        '--parts',
        type=str,
        required=True,
        help='Non-increasing parts, e.g. 8,7,5,4,4,3,2,2,2,1'
    )
    parser.add_argument(
        '--style',
        choices=[s.value for s in DiagramStyle],
        default=DiagramStyle.ODD_RESTRICTED.value,
        help='Diagram style (default: odd)'
    )
    parser.add_argument(
        '--conjugate',
        action='store_true',
        help='Also show the transposed diagram (odd style only)'
    )
    add_common_arguments(parser)


def parse_parts(literal: str) -> Partition:
    """Parse a partition literal; malformed input is a usage error."""
    try:
        return Partition.parse(literal)
    except FamilyViolationError:
        raise
    except PartitionError as e:
        raise UsageError(str(e)) from e


def run_diagram(cli: CliConfig, conjugate: bool = False) -> int:
    """
    Print the diagram of the partition.

    Raises:
        UsageError: Malformed partition literal
        FamilyViolationError: Partition outside the style's family
    """
    partition = parse_parts(cli.parts or "")
    style = DiagramStyle(cli.style or DiagramStyle.ODD_RESTRICTED.value)
    diagram = to_diagram(partition, style)
    transposed = None
    if conjugate:
        if style is not DiagramStyle.ODD_RESTRICTED:
            raise UsageError("--conjugate needs --style odd")
        transposed = conjugate_diagram(diagram)

    if cli.output_format == "json":
        payload = {"partition": list(partition.parts), **diagram.to_dict()}
        if transposed is not None:
            payload["conjugate"] = {
                "partition": list(from_odd_diagram(transposed).parts),
                **transposed.to_dict(),
            }
        emit(json.dumps(payload))
    else:
        emit(render(diagram))
        if transposed is not None:
            emit("")
            emit(f"conjugate: {from_odd_diagram(transposed)}")
            emit(render(transposed))
    return 0


def diagram_cli(argv: Optional[List[str]] = None) -> int:
    """Standalone entry point: python src/cli/diagram.py --parts 8,7,5 --style odd."""
    parser = argparse.ArgumentParser(
        description="Render the 2/1 diagram of a partition",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    add_arguments(parser)
    args = parser.parse_args(argv)
    with error_context("cli", "diagram"):
        cli = build_cli_config("diagram", args)
        return run_diagram(cli, args.conjugate)


def main():
    sys.exit(diagram_cli())


if __name__ == "__main__":
    main()
