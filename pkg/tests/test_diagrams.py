"""
Tests for 2/1 diagrams
"""

import sys
from pathlib import Path

import pytest

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from combinatorics.diagrams import (
    Diagram,
    DiagramStyle,
    conjugate_diagram,
    even_row,
    from_even_diagram,
    from_odd_diagram,
    last_column_sum,
    odd_row,
    parse_rows,
    render,
    to_diagram,
    to_even_diagram,
    to_odd_diagram,
)
from core.partitions import Partition, PartitionFamily, enumerate_partitions
from utils.error_handler import DiagramError, FamilyViolationError

DISPLAY = Partition((8, 7, 5, 4, 4, 3, 2, 2, 2, 1))


class TestRows:
    """Test the row encodings"""

    def test_odd_rows(self):
        assert odd_row(8) == (2, 2, 2, 2)
        assert odd_row(7) == (2, 2, 2, 1)
        assert odd_row(1) == (1,)

    def test_even_rows(self):
        assert even_row(5) == (1, 2, 2)
        assert even_row(4) == (1, 2, 1)
        assert even_row(2) == (1, 1)
        assert even_row(1) == (1,)


class TestOddDiagrams:
    """Test odd-restricted diagrams"""

    def test_display_partition(self):
        diagram = to_odd_diagram(DISPLAY)
        assert diagram.rows[0] == (2, 2, 2, 2)
        assert diagram.rows[1] == (2, 2, 2, 1)
        assert diagram.rows[5] == (2, 1)
        assert diagram.rows[-1] == (1,)
        assert diagram.row_count == 10
        assert diagram.column_count == 4
        assert diagram.count(1) == DISPLAY.odd_count

    def test_roundtrip(self):
        assert from_odd_diagram(to_odd_diagram(DISPLAY)) == DISPLAY

    def test_conjugate(self):
        conj = conjugate_diagram(to_odd_diagram(DISPLAY))
        assert conj.row_sums() == (19, 11, 5, 3)
        assert conjugate_diagram(conj) == to_odd_diagram(DISPLAY)

    def test_last_column_sum(self):
        assert last_column_sum(to_odd_diagram(DISPLAY)) == 3

    def test_repeated_odd_rejected(self):
        with pytest.raises(FamilyViolationError):
            to_odd_diagram(Partition((3, 3)))

    def test_every_member_encodes(self):
        family = PartitionFamily.no_repeated_odd()
        for n in range(12):
            for lam in enumerate_partitions(n, family):
                diagram = to_odd_diagram(lam)
                assert from_odd_diagram(diagram) == lam
                assert from_odd_diagram(conjugate_diagram(diagram)).size == n


class TestEvenDiagrams:
    """Test even-restricted diagrams"""

    def test_rows(self):
        diagram = to_even_diagram(Partition((5, 3, 2)))
        assert diagram.rows == ((1, 2, 2), (1, 2), (1, 1))
        assert last_column_sum(diagram) == 2

    def test_repeated_even_rejected(self):
        with pytest.raises(FamilyViolationError):
            to_even_diagram(Partition((2, 2)))

    def test_conjugation_refused(self):
        with pytest.raises(DiagramError):
            conjugate_diagram(to_even_diagram(Partition((3,))))

    def test_style_checked_on_decode(self):
        with pytest.raises(DiagramError):
            from_odd_diagram(to_even_diagram(Partition((3,))))
        with pytest.raises(DiagramError):
            from_even_diagram(to_odd_diagram(Partition((3,))))

    def test_every_member_encodes(self):
        family = PartitionFamily.no_repeated_even()
        for n in range(12):
            for lam in enumerate_partitions(n, family):
                assert from_even_diagram(to_diagram(lam, DiagramStyle.EVEN_RESTRICTED)) == lam


class TestValidation:
    """Test the diagram invariants"""

    def test_one_inside_row(self):
        with pytest.raises(DiagramError):
            Diagram(DiagramStyle.ODD_RESTRICTED, ((2, 1, 2),))

    def test_one_above_cell(self):
        with pytest.raises(DiagramError):
            Diagram(DiagramStyle.ODD_RESTRICTED, ((2, 1), (2, 2)))

    def test_increasing_rows(self):
        with pytest.raises(DiagramError):
            Diagram(DiagramStyle.ODD_RESTRICTED, ((2,), (2, 2)))

    def test_bad_cell_value(self):
        with pytest.raises(DiagramError):
            Diagram(DiagramStyle.ODD_RESTRICTED, ((3,),))

    def test_even_style_starts_with_one(self):
        with pytest.raises(DiagramError):
            Diagram(DiagramStyle.EVEN_RESTRICTED, ((2,),))

    def test_style_from_string(self):
        assert Diagram("odd", ((2,),)).style is DiagramStyle.ODD_RESTRICTED
        with pytest.raises(DiagramError):
            Diagram("diagonal", ((2,),))

    def test_extreme_box(self):
        diagram = to_odd_diagram(DISPLAY)
        assert diagram.is_extreme(1, 3)
        assert not diagram.is_extreme(0, 3)


class TestRendering:
    """Test text and dict forms"""

    def test_render(self):
        assert render(to_odd_diagram(Partition((7, 4, 1)))) == "2 2 2 1\n2 2\n1"

    def test_parse_rows(self):
        diagram = to_odd_diagram(DISPLAY)
        assert parse_rows(render(diagram), DiagramStyle.ODD_RESTRICTED) == diagram
        with pytest.raises(DiagramError):
            parse_rows("2 x", DiagramStyle.ODD_RESTRICTED)

    def test_dict(self):
        diagram = to_even_diagram(Partition((3, 2)))
        assert diagram.to_dict() == {"style": "even", "rows": [[1, 2], [1, 1]]}
        assert Diagram.from_dict(diagram.to_dict()) == diagram
        with pytest.raises(DiagramError):
            Diagram.from_dict({"rows": [[1]]})


class TestRoundTripsAtTwenty:
    """Test every diagram round trip up to size 20"""

    @pytest.mark.slow
    def test_odd_round_trips(self):
        family = PartitionFamily.no_repeated_odd()
        for n in range(21):
            for lam in enumerate_partitions(n, family):
                diagram = to_odd_diagram(lam)
                assert from_odd_diagram(diagram) == lam
                conjugate = from_odd_diagram(conjugate_diagram(diagram))
                assert conjugate.size == n
                assert from_odd_diagram(conjugate_diagram(to_odd_diagram(conjugate))) == lam

    @pytest.mark.slow
    def test_even_round_trips(self):
        family = PartitionFamily.no_repeated_even()
        for n in range(21):
            for lam in enumerate_partitions(n, family):
                assert from_even_diagram(to_diagram(lam, DiagramStyle.EVEN_RESTRICTED)) == lam
