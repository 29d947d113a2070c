"""
Tests for the sign-reversing involutions and their sweeps
"""

import sys
from pathlib import Path

import pytest

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from combinatorics.involutions import (
    Exceptional,
    ExceptionalKind,
    InvolutionCase,
    classify_exceptional,
    franklin,
    has_left,
    has_right,
    left_neighbour,
    neighbour_path,
    right_neighbour,
    sigma_even,
    sigma_odd,
    staircase_length,
    top_multiplicity,
)
from combinatorics.sweeps import SWEEPS, run_sweep
from core.partitions import Partition, PartitionFamily, enumerate_partitions
from utils.error_handler import (
    ExceptionalPartitionError,
    FamilyViolationError,
    GuardViolationError,
    InvolutionError,
)


def P(*parts):
    return Partition(tuple(parts))


class TestExceptionalShapes:
    """Test exceptional shapes and their classification"""

    @pytest.mark.parametrize("kind,r,parts", [
        (ExceptionalKind.PENTAGONAL_A, 2, (3, 2)),
        (ExceptionalKind.PENTAGONAL_B, 2, (4, 3)),
        (ExceptionalKind.SQUARE, 3, (3, 3, 3)),
        (ExceptionalKind.STAIRCASE_ODD, 2, (3, 3)),
        (ExceptionalKind.STAIRCASE_EVEN, 2, (5, 5)),
    ])
    def test_shape_and_size(self, kind, r, parts):
        shape = Exceptional(kind, r)
        assert shape.partition().parts == parts
        assert shape.size == sum(parts)

    def test_str(self):
        assert str(Exceptional(ExceptionalKind.EMPTY)) == "Empty"
        assert str(Exceptional(ExceptionalKind.PENTAGONAL_A, 2)) == "PentagonalA(2)"
        assert str(Exceptional(ExceptionalKind.STAIRCASE_EVEN, 1)) == "StaircaseEven(1)"

    def test_classify_distinct(self):
        assert classify_exceptional(P(3, 2), InvolutionCase.IV) == Exceptional(ExceptionalKind.PENTAGONAL_A, 2)
        assert classify_exceptional(P(2), InvolutionCase.IV) == Exceptional(ExceptionalKind.PENTAGONAL_B, 1)
        assert classify_exceptional(P(5, 4), InvolutionCase.IV) is None
        assert classify_exceptional(P(), InvolutionCase.IV).kind is ExceptionalKind.EMPTY

    def test_classify_square(self):
        assert classify_exceptional(P(2, 2), InvolutionCase.V) == Exceptional(ExceptionalKind.SQUARE, 2)
        assert classify_exceptional(P(2, 2, 2), InvolutionCase.V) is None
        assert classify_exceptional(P(), InvolutionCase.V).kind is ExceptionalKind.EMPTY

    def test_classify_staircases(self):
        assert classify_exceptional(P(1), InvolutionCase.VI) == Exceptional(ExceptionalKind.STAIRCASE_ODD, 1)
        assert classify_exceptional(P(3), InvolutionCase.VI) == Exceptional(ExceptionalKind.STAIRCASE_EVEN, 1)
        assert classify_exceptional(P(3, 3), InvolutionCase.VI) == Exceptional(ExceptionalKind.STAIRCASE_ODD, 2)
        assert classify_exceptional(P(5), InvolutionCase.VI) is None

    def test_classify_requires_family(self):
        with pytest.raises(FamilyViolationError):
            classify_exceptional(P(2, 2), InvolutionCase.IV)
        with pytest.raises(FamilyViolationError):
            classify_exceptional(P(2, 2), InvolutionCase.VI)

    def test_helpers(self):
        assert staircase_length(P(7, 6, 5, 3)) == 3
        assert staircase_length(P()) == 0
        assert top_multiplicity(P(4, 4, 1)) == 2


class TestFranklin:
    """Test Franklin's involution"""

    def test_moves(self):
        assert franklin(P(5, 3, 1)) == P(6, 3)
        assert franklin(P(6, 3)) == P(5, 3, 1)
        assert franklin(P(5, 4)) == P(4, 3, 2)
        assert franklin(P(4, 3, 2)) == P(5, 4)

    @pytest.mark.parametrize("parts", [(), (1,), (2,), (3, 2), (4, 3)])
    def test_exceptional_refused(self, parts):
        with pytest.raises(ExceptionalPartitionError):
            franklin(P(*parts))

    def test_repeated_parts_refused(self):
        with pytest.raises(FamilyViolationError):
            franklin(P(3, 3))

    def test_involution_to_fourteen(self):
        family = PartitionFamily.distinct()
        for n in range(15):
            for lam in enumerate_partitions(n, family):
                if classify_exceptional(lam, InvolutionCase.IV) is not None:
                    continue
                mu = franklin(lam)
                assert franklin(mu) == lam
                assert abs(mu.length - lam.length) == 1


class TestSigmaOdd:
    """Test conjugation of odd-restricted diagrams"""

    def test_display_partition(self):
        assert sigma_odd(P(8, 7, 5, 4, 4, 3, 2, 2, 2, 1)) == P(19, 11, 5, 3)
        assert sigma_odd(P(19, 11, 5, 3)) == P(8, 7, 5, 4, 4, 3, 2, 2, 2, 1)

    def test_small(self):
        assert sigma_odd(P(4)) == P(2, 2)
        assert sigma_odd(P(2)) == P(2)
        assert sigma_odd(P()) == P()

    def test_repeated_odd_refused(self):
        with pytest.raises(FamilyViolationError):
            sigma_odd(P(1, 1))


class TestNeighbours:
    """Test the neighbour moves and paths"""

    def test_moves(self):
        assert right_neighbour(P(3, 1)) == P(4)
        assert left_neighbour(P(3, 1)) == P(2, 1, 1)
        assert right_neighbour(P(2, 1, 1)) == P(3, 1)

    def test_guards(self):
        assert not has_right(P(4))
        assert not has_left(P(1, 1, 1, 1))
        with pytest.raises(GuardViolationError):
            right_neighbour(P(4))
        with pytest.raises(GuardViolationError):
            left_neighbour(P(1, 1, 1, 1))

    def test_square_refused(self):
        with pytest.raises(ExceptionalPartitionError):
            right_neighbour(P(2, 2))
        with pytest.raises(ExceptionalPartitionError):
            neighbour_path(P(3, 3, 3))

    def test_path_of_four(self):
        expected = [P(1, 1, 1, 1), P(2, 1, 1), P(3, 1), P(4)]
        assert neighbour_path(P(3, 1)) == expected
        assert neighbour_path(P(1, 1, 1, 1)) == expected
        assert neighbour_path(P(4)) == expected

    def test_two_vertex_path(self):
        assert neighbour_path(P(2)) == [P(1, 1), P(2)]


class TestSigmaEven:
    """Test the final-column involution"""

    def test_moves(self):
        assert sigma_even(P(5)) == P(3, 2)
        assert sigma_even(P(3, 2)) == P(5)
        assert sigma_even(P(2)) == P(1, 1)
        assert sigma_even(P(1, 1)) == P(2)

    @pytest.mark.parametrize("parts", [(), (1,), (3,), (3, 3), (5, 5)])
    def test_exceptional_refused(self, parts):
        with pytest.raises(ExceptionalPartitionError):
            sigma_even(P(*parts))

    def test_repeated_even_refused(self):
        with pytest.raises(FamilyViolationError):
            sigma_even(P(2, 2))


class TestSweeps:
    """Test the exhaustive sweeps"""

    @pytest.mark.parametrize("name", list(SWEEPS))
    def test_small_sweeps_pass(self, name):
        report = run_sweep(name, 12)
        assert report.passed
        assert report.violations == []
        assert report.checked > 0

    @pytest.mark.slow
    @pytest.mark.parametrize("name,max_n", [
        ("franklin", 40), ("sigma-odd", 30), ("paths", 35), ("sigma-even", 30),
    ])
    def test_sweeps_pass_at_full_bound(self, name, max_n):
        report = run_sweep(name, max_n)
        assert report.passed
        assert report.violations == []

    def test_franklin_exceptional_list(self):
        report = run_sweep("franklin", 12)
        assert report.stats["exceptional"] == [
            "Empty", "PentagonalA(1)", "PentagonalB(1)",
            "PentagonalA(2)", "PentagonalB(2)", "PentagonalA(3)",
        ]

    def test_path_statistics(self):
        stats = run_sweep("paths", 4).stats
        assert 1 not in stats["per_size"]
        assert stats["per_size"][2] == {"paths": 1, "longest": 2, "lengths": {2: 1}}
        assert stats["per_size"][4] == {"paths": 1, "longest": 4, "lengths": {4: 1}}

    def test_sigma_even_at_zero(self):
        report = run_sweep("sigma-even", 0)
        assert report.passed
        assert report.checked == 1
        assert report.stats["exceptional"] == ["Empty"]

    def test_report_dict(self):
        data = run_sweep("sigma-odd", 5).to_dict()
        assert data["involution"] == "sigma-odd"
        assert data["maxN"] == 5
        assert data["passed"] is True

    def test_unknown_name(self):
        with pytest.raises(InvolutionError):
            run_sweep("zigzag", 5)

    def test_negative_bound(self):
        with pytest.raises(InvolutionError):
            run_sweep("franklin", -1)
