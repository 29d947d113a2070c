"""
Sign-Reversing Involutions

The pairing maps that cancel all but a few partitions in each signed sum:

- franklin: distinct parts, fixed set = empty and the two pentagonal shapes
- sigma_odd: conjugation of odd-restricted diagrams, no exceptions
- right_neighbour / left_neighbour / neighbour_path: the path structure on
  all partitions of N, exceptions = square shapes
- sigma_even: final-column move on even-restricted diagrams, exceptions =
  empty and the two odd staircases

Each map refuses exceptional inputs with ExceptionalPartitionError instead of
returning them unchanged.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from core.partitions import Partition, PartitionFamily
from utils.error_handler import (
    ExceptionalPartitionError,
    GuardViolationError,
    InvolutionError,
)

from .diagrams import (
    Diagram,
    DiagramStyle,
    even_row,
    conjugate_diagram,
    from_even_diagram,
    from_odd_diagram,
    last_column_sum,
    to_even_diagram,
    to_odd_diagram,
)

logger = logging.getLogger(__name__)


class InvolutionCase(Enum):
    """Identity rows that come with an exceptional set."""
    IV = "iv"
    V = "v"
    VI = "vi"


class ExceptionalKind(Enum):
    EMPTY = "empty"
    PENTAGONAL_A = "pentagonal-a"
    PENTAGONAL_B = "pentagonal-b"
    SQUARE = "square"
    STAIRCASE_ODD = "staircase-odd"
    STAIRCASE_EVEN = "staircase-even"


@dataclass(frozen=True)
class Exceptional:
    """An unpaired partition shape with its parameter."""

    kind: ExceptionalKind
    parameter: int = 0

    def partition(self) -> Partition:
        r = self.parameter
        kind = self.kind
        if kind is ExceptionalKind.EMPTY:
            return Partition(())
        if kind is ExceptionalKind.PENTAGONAL_A:
            return Partition(tuple(range(2 * r - 1, r - 1, -1)))
        if kind is ExceptionalKind.PENTAGONAL_B:
            return Partition(tuple(range(2 * r, r, -1)))
        if kind is ExceptionalKind.SQUARE:
            return Partition((r,) * r)
        if kind is ExceptionalKind.STAIRCASE_ODD:
            return Partition((2 * r - 1,) * r)
        return Partition((2 * r + 1,) * r)

    @property
    def size(self) -> int:
        r = self.parameter
        return {
            ExceptionalKind.EMPTY: 0,
            ExceptionalKind.PENTAGONAL_A: r * (3 * r - 1) // 2,
            ExceptionalKind.PENTAGONAL_B: r * (3 * r + 1) // 2,
            ExceptionalKind.SQUARE: r * r,
            ExceptionalKind.STAIRCASE_ODD: r * (2 * r - 1),
            ExceptionalKind.STAIRCASE_EVEN: r * (2 * r + 1),
        }[self.kind]

    def __str__(self) -> str:
        if self.kind is ExceptionalKind.EMPTY:
            return "Empty"
        name = "".join(word.capitalize() for word in self.kind.value.split("-"))
        return f"{name}({self.parameter})"


_CASE_FAMILIES = {
    InvolutionCase.IV: PartitionFamily.distinct(),
    InvolutionCase.V: PartitionFamily.all(),
    InvolutionCase.VI: PartitionFamily.no_repeated_even(),
}


def staircase_length(partition: Partition) -> int:
    """Length t of the initial run of consecutive parts λ1, λ1-1, ..."""
    parts = partition.parts
    if not parts:
        return 0
    t = 1
    while t < len(parts) and parts[t] == parts[0] - t:
        t += 1
    return t


def top_multiplicity(partition: Partition) -> int:
    """Number of parts equal to the largest part."""
    return partition.n_at(partition.largest) if partition.parts else 0


def classify_exceptional(partition: Partition, case: InvolutionCase) -> Optional[Exceptional]:
    """
    The exceptional shape of a partition for the given case, if any.

    Raises:
        FamilyViolationError: The partition is outside the case's family
    """
    case = InvolutionCase(case)
    _CASE_FAMILIES[case].require(partition)
    if partition.is_empty():
        return Exceptional(ExceptionalKind.EMPTY)

    n = partition.length
    s = partition.smallest
    if case is InvolutionCase.IV:
        if staircase_length(partition) == n:
            if s == n:
                return Exceptional(ExceptionalKind.PENTAGONAL_A, n)
            if s == n + 1:
                return Exceptional(ExceptionalKind.PENTAGONAL_B, n)
        return None

    if partition.distinct_count != 1:
        return None
    p = partition.largest
    if case is InvolutionCase.V:
        return Exceptional(ExceptionalKind.SQUARE, n) if p == n else None
    if p == 2 * n - 1:
        return Exceptional(ExceptionalKind.STAIRCASE_ODD, n)
    if p == 2 * n + 1:
        return Exceptional(ExceptionalKind.STAIRCASE_EVEN, n)
    return None


def _reject_exceptional(partition: Partition, case: InvolutionCase, name: str) -> None:
    kind = classify_exceptional(partition, case)
    if kind is not None:
        raise ExceptionalPartitionError(f"{name} is undefined on exceptional {partition} ({kind})")


def _add_to_top(parts: Tuple[int, ...], count: int, delta: int) -> List[int]:
    return [p + delta if i < count else p for i, p in enumerate(parts)]


def franklin(partition: Partition) -> Partition:
    """
    Franklin's involution on partitions into distinct parts.

    With s the smallest part and t the length of the initial staircase: if
    s <= t the smallest part is removed and 1 added to each of the s largest
    parts; otherwise 1 is taken from each of the t largest parts and a new
    part t appended.

    Raises:
        FamilyViolationError: Repeated parts
        ExceptionalPartitionError: Empty or pentagonal input
    """
    _reject_exceptional(partition, InvolutionCase.IV, "franklin")
    parts = partition.parts
    s = partition.smallest
    t = staircase_length(partition)
    if s <= t:
        moved = _add_to_top(parts[:-1], s, 1)
    else:
        moved = _add_to_top(parts, t, -1) + [t]
    return Partition(tuple(moved))


def sigma_odd(partition: Partition) -> Partition:
    """Conjugation of odd-restricted diagrams, read back as a partition."""
    return from_odd_diagram(conjugate_diagram(to_odd_diagram(partition)))


def right_neighbour(partition: Partition) -> Partition:
    """Remove the smallest part s and add 1 to the s largest parts; needs s <= s'."""
    _reject_exceptional(partition, InvolutionCase.V, "right_neighbour")
    s = partition.smallest
    s_top = top_multiplicity(partition)
    if s > s_top:
        raise GuardViolationError(
            f"right move needs smallest part {s} <= top multiplicity {s_top} in {partition}"
        )
    return Partition(tuple(_add_to_top(partition.parts[:-1], s, 1)))


def left_neighbour(partition: Partition) -> Partition:
    """Take 1 from each of the s' largest parts and append s'; needs s >= s'."""
    _reject_exceptional(partition, InvolutionCase.V, "left_neighbour")
    s = partition.smallest
    s_top = top_multiplicity(partition)
    if s < s_top:
        raise GuardViolationError(
            f"left move needs smallest part {s} >= top multiplicity {s_top} in {partition}"
        )
    return Partition(tuple(_add_to_top(partition.parts, s_top, -1) + [s_top]))


def has_left(partition: Partition) -> bool:
    return partition.smallest >= top_multiplicity(partition)


def has_right(partition: Partition) -> bool:
    return partition.smallest <= top_multiplicity(partition)


def neighbour_path(partition: Partition) -> List[Partition]:
    """
    The maximal neighbour path through a non-exceptional partition, left to right.

    Interior vertices have s == s'; the left end has s < s' and the right end
    s > s'.
    """
    _reject_exceptional(partition, InvolutionCase.V, "neighbour_path")
    limit = partition.size * partition.size + 2
    start = partition
    steps = 0
    while has_left(start):
        start = left_neighbour(start)
        steps += 1
        if steps > limit:
            raise InvolutionError(f"left walk from {partition} does not terminate")

    path = [start]
    seen = {start}
    current = start
    while has_right(current):
        current = right_neighbour(current)
        if current in seen:
            raise InvolutionError(f"neighbour walk from {partition} revisits {current}")
        seen.add(current)
        path.append(current)
    return path


def sigma_even(partition: Partition) -> Partition:
    """
    Final-column involution on even-restricted diagrams.

    With s the smallest part and s'' the sum of the last column: if s < s'',
    or s == s'' and s is even, the last row is removed and re-attached as a
    new last column of sum s. Otherwise the last column is removed and
    re-attached as a new last row of sum s''.

    Raises:
        FamilyViolationError: Repeated even parts
        ExceptionalPartitionError: Empty or odd-staircase input
    """
    _reject_exceptional(partition, InvolutionCase.VI, "sigma_even")
    diagram = to_even_diagram(partition)
    rows = list(diagram.rows)
    s = partition.smallest
    s_last = last_column_sum(diagram)

    if s < s_last or (s == s_last and s % 2 == 0):
        rows.pop()
        width = len(rows[0])
        half, odd = divmod(s, 2)
        column = (2,) * half + (1,) * odd
        if len(column) > len(rows) or any(len(rows[i]) != width for i in range(len(column))):
            raise InvolutionError(f"no room for a column of sum {s} in {partition}")
        for i, cell in enumerate(column):
            rows[i] = rows[i] + (cell,)
    else:
        width = len(rows[0])
        rows = [row[:-1] if len(row) == width else row for row in rows]
        rows.append(even_row(s_last))

    return from_even_diagram(Diagram(DiagramStyle.EVEN_RESTRICTED, tuple(rows)))
