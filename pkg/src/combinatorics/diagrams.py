"""
2/1 Diagrams

Ferrers shapes whose cells hold 1 or 2, in two styles:

- odd-restricted: an even part 2k is a row of k 2s, an odd part 2k+1 is
  k 2s followed by a 1. Encodes partitions with no repeated odd part.
- even-restricted: an odd part 2k+1 is a 1 followed by k 2s, an even part
  2k is a 1, then k-1 2s, then a 1. Encodes partitions with no repeated
  even part.

Outside the first column of the even style, a 1 may only sit in an extreme
box: the last cell of its row with no cell below it.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Mapping, Sequence, Tuple

from core.partitions import Partition, PartitionFamily
from utils.error_handler import DiagramError

Row = Tuple[int, ...]


class DiagramStyle(Enum):
    ODD_RESTRICTED = "odd"
    EVEN_RESTRICTED = "even"


@dataclass(frozen=True)
class Diagram:
    """Row-major grid of 1/2 cells; constructing one validates every invariant."""

    style: DiagramStyle
    rows: Tuple[Row, ...]

    def __post_init__(self):
        if not isinstance(self.style, DiagramStyle):
            try:
                object.__setattr__(self, "style", DiagramStyle(self.style))
            except ValueError as e:
                raise DiagramError(f"unknown diagram style {self.style!r}") from e
        rows = tuple(tuple(int(c) for c in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        _validate(self.style, rows)

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> "Diagram":
        try:
            return cls(DiagramStyle(data["style"]), tuple(tuple(r) for r in data["rows"]))
        except (KeyError, TypeError, ValueError) as e:
            raise DiagramError(f"malformed diagram data: {e}") from e

    def to_dict(self) -> Dict[str, object]:
        return {"style": self.style.value, "rows": [list(r) for r in self.rows]}

    @property
    def row_count(self) -> int:
        return len(self.rows)

    @property
    def column_count(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def row_sums(self) -> Tuple[int, ...]:
        return tuple(sum(r) for r in self.rows)

    def count(self, value: int) -> int:
        """Number of cells holding value."""
        return sum(row.count(value) for row in self.rows)

    def column(self, index: int) -> Tuple[int, ...]:
        return tuple(row[index] for row in self.rows if len(row) > index)

    def is_extreme(self, i: int, j: int) -> bool:
        """True when cell (i, j) ends row i and has no cell below it."""
        below = len(self.rows[i + 1]) if i + 1 < len(self.rows) else 0
        return j == len(self.rows[i]) - 1 and below <= j

    def __str__(self) -> str:
        return render(self)


def _validate(style: DiagramStyle, rows: Tuple[Row, ...]) -> None:
    for i, row in enumerate(rows):
        if not row:
            raise DiagramError(f"row {i} is empty")
        if any(c not in (1, 2) for c in row):
            raise DiagramError(f"row {i} holds a value other than 1 or 2: {row}")
        if i + 1 < len(rows) and len(rows[i + 1]) > len(row):
            raise DiagramError(f"row lengths increase at row {i + 1}")

    first_interior = 0 if style is DiagramStyle.ODD_RESTRICTED else 1
    for i, row in enumerate(rows):
        if style is DiagramStyle.EVEN_RESTRICTED and row[0] != 1:
            raise DiagramError(f"row {i} of an even-style diagram must start with 1")
        below = len(rows[i + 1]) if i + 1 < len(rows) else 0
        for j in range(first_interior, len(row)):
            if row[j] != 1:
                continue
            if j != len(row) - 1:
                raise DiagramError(f"1 at ({i}, {j}) is not at the end of its row")
            if below > j:
                raise DiagramError(f"1 at ({i}, {j}) is not an extreme box")

    sums = [sum(r) for r in rows]
    if any(a < b for a, b in zip(sums, sums[1:])):
        raise DiagramError(f"row sums are not non-increasing: {sums}")


def odd_row(part: int) -> Row:
    k, rest = divmod(part, 2)
    return (2,) * k + (1,) * rest


def even_row(part: int) -> Row:
    k, rest = divmod(part, 2)
    if rest:
        return (1,) + (2,) * k
    return (1,) + (2,) * (k - 1) + (1,)


def to_odd_diagram(partition: Partition) -> Diagram:
    """Odd-restricted diagram of a partition with no repeated odd part."""
    PartitionFamily.no_repeated_odd().require(partition)
    return Diagram(DiagramStyle.ODD_RESTRICTED, tuple(odd_row(p) for p in partition.parts))


def from_odd_diagram(diagram: Diagram) -> Partition:
    if diagram.style is not DiagramStyle.ODD_RESTRICTED:
        raise DiagramError(f"expected an odd-style diagram, got {diagram.style.value}")
    return Partition(diagram.row_sums())


def to_even_diagram(partition: Partition) -> Diagram:
    """Even-restricted diagram of a partition with no repeated even part."""
    PartitionFamily.no_repeated_even().require(partition)
    return Diagram(DiagramStyle.EVEN_RESTRICTED, tuple(even_row(p) for p in partition.parts))


def from_even_diagram(diagram: Diagram) -> Partition:
    if diagram.style is not DiagramStyle.EVEN_RESTRICTED:
        raise DiagramError(f"expected an even-style diagram, got {diagram.style.value}")
    return Partition(diagram.row_sums())


def to_diagram(partition: Partition, style: DiagramStyle) -> Diagram:
    if style is DiagramStyle.ODD_RESTRICTED:
        return to_odd_diagram(partition)
    return to_even_diagram(partition)


def conjugate_diagram(diagram: Diagram) -> Diagram:
    """Transpose of an odd-restricted diagram; cells keep their values."""
    if diagram.style is not DiagramStyle.ODD_RESTRICTED:
        raise DiagramError("only odd-style diagrams are conjugated")
    columns = [diagram.column(j) for j in range(diagram.column_count)]
    return Diagram(DiagramStyle.ODD_RESTRICTED, tuple(columns))


def last_column_sum(diagram: Diagram) -> int:
    """Sum of the cells in the rightmost column."""
    if not diagram.rows:
        raise DiagramError("an empty diagram has no last column")
    return sum(diagram.column(diagram.column_count - 1))


def render(diagram: Diagram) -> str:
    return "\n".join(" ".join(str(c) for c in row) for row in diagram.rows)


def parse_rows(text: str, style: DiagramStyle) -> Diagram:
    """Inverse of render."""
    rows: List[Sequence[int]] = []
    for line in text.strip().splitlines():
        try:
            rows.append(tuple(int(c) for c in line.split()))
        except ValueError as e:
            raise DiagramError(f"cannot parse diagram row {line!r}") from e
    return Diagram(style, tuple(rows))
