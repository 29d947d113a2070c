"""
Tests for partitions, families and enumeration
"""

import sys
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from core.partitions import (
    FamilyKind,
    Partition,
    PartitionFamily,
    brute_force_filter,
    count_gf,
    PartitionProfiles,
    enumerate_partitions,
    iter_profiles,
    partition_stats,
    profile_gfs,
    weighted_gf,
    weighted_gfs,
)
from utils.error_handler import FamilyViolationError, PartitionError, SeriesOverflowError

PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176]
DISTINCT_NUMBERS = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27]

FAMILIES = [
    PartitionFamily.distinct(),
    PartitionFamily.no_repeated_odd(),
    PartitionFamily.no_repeated_even(),
    PartitionFamily.exactly_one_repeated(),
    PartitionFamily.distinct_containing(2),
    PartitionFamily.only_repeat_is(1),
    PartitionFamily.only_repeat_is(3),
    PartitionFamily.complete_up_to(3),
]


@st.composite
def partitions(draw, max_size=20):
    n = draw(st.integers(0, max_size))
    parts = []
    remaining = n
    cap = n
    while remaining:
        part = draw(st.integers(1, min(cap, remaining)))
        parts.append(part)
        remaining -= part
        cap = part
    return Partition(tuple(parts))


class TestPartition:
    """Test the partition value type"""

    def test_statistics(self):
        lam = Partition((5, 3, 3, 1))
        assert lam.size == 12
        assert lam.length == 4
        assert lam.largest == 5
        assert lam.smallest == 1
        assert lam.n_at(3) == 2
        assert lam.n_at(4) == 0
        assert lam.distinct_count == 3
        assert lam.odd_count == 4
        assert lam.even_count == 0
        assert lam.rank == 1

    def test_empty_partition(self):
        empty = Partition(())
        assert empty.size == 0
        assert empty.length == 0
        assert empty.largest == 0
        assert empty.is_empty()
        assert str(empty) == "∅"
        assert empty.conjugate() == empty

    def test_rejects_increasing(self):
        with pytest.raises(PartitionError):
            Partition((1, 2))

    def test_rejects_non_positive(self):
        with pytest.raises(PartitionError):
            Partition((3, 0))

    def test_parse(self):
        assert Partition.parse("8,7,5").parts == (8, 7, 5)
        assert Partition.parse("8 7 5").parts == (8, 7, 5)
        assert Partition.parse("").is_empty()
        assert Partition.parse("∅").is_empty()
        with pytest.raises(PartitionError):
            Partition.parse("5,7")
        with pytest.raises(PartitionError):
            Partition.parse("a,b")

    def test_str(self):
        assert str(Partition((4, 2, 2, 1, 1))) == "42²1²"
        assert str(Partition((10, 8, 8, 1))) == "10,8²,1"
        assert str(Partition((6, 1, 1))) == "61²"

    def test_conjugate(self):
        assert Partition((4, 2, 1)).conjugate().parts == (3, 2, 1, 1)
        assert Partition((3, 3)).conjugate().parts == (2, 2, 2)

    @given(partitions())
    @settings(max_examples=100, deadline=None)
    def test_conjugate_involution(self, lam):
        conj = lam.conjugate()
        assert conj.conjugate() == lam
        assert conj.size == lam.size
        assert conj.largest == lam.length
        assert conj.length == lam.largest

    def test_property_tests_follow_seed_option(self, qpart_seed):
        assert self.test_conjugate_involution._hypothesis_internal_use_seed == qpart_seed

    def test_stats_snapshot(self):
        stats = partition_stats(Partition((4, 4, 1)))
        assert stats.n_at(4) == 2
        assert stats.rank == 1

    def test_dict_roundtrip(self):
        lam = Partition((3, 1))
        assert Partition.from_dict(lam.to_dict()) == lam


class TestFamilies:
    """Test family membership"""

    def test_membership(self):
        assert PartitionFamily.distinct().contains(Partition((5, 3, 1)))
        assert not PartitionFamily.distinct().contains(Partition((3, 3)))
        assert PartitionFamily.no_repeated_odd().contains(Partition((4, 4, 3, 1)))
        assert not PartitionFamily.no_repeated_odd().contains(Partition((3, 3)))
        assert PartitionFamily.no_repeated_even().contains(Partition((3, 3, 2)))
        assert not PartitionFamily.no_repeated_even().contains(Partition((2, 2)))
        assert PartitionFamily.exactly_one_repeated().contains(Partition((5, 1, 1, 1)))
        assert not PartitionFamily.exactly_one_repeated().contains(Partition((2, 2, 1, 1)))
        assert not PartitionFamily.exactly_one_repeated().contains(Partition((3, 2)))
        assert PartitionFamily.complete_up_to(3).contains(Partition((3, 2, 2, 1)))
        assert not PartitionFamily.complete_up_to(3).contains(Partition((3, 1)))
        assert PartitionFamily.complete_up_to(0).contains(Partition(()))

    def test_parameter_validation(self):
        with pytest.raises(PartitionError):
            PartitionFamily(FamilyKind.DISTINCT_CONTAINING)
        with pytest.raises(PartitionError):
            PartitionFamily(FamilyKind.DISTINCT, 3)
        with pytest.raises(PartitionError):
            PartitionFamily.only_repeat_is(0)

    def test_require(self):
        with pytest.raises(FamilyViolationError):
            PartitionFamily.distinct().require(Partition((2, 2)))
        PartitionFamily.distinct().require(Partition((2, 1)))

    def test_str(self):
        assert str(PartitionFamily.distinct_containing(3)) == "DistinctContaining(3)"
        assert str(PartitionFamily.no_repeated_odd()) == "NoRepeatedOdd"


class TestEnumeration:
    """Test exhaustive enumeration"""

    @pytest.mark.parametrize("n", range(16))
    def test_partition_numbers(self, n):
        assert len(enumerate_partitions(n)) == PARTITION_NUMBERS[n]

    @pytest.mark.parametrize("n", range(16))
    def test_distinct_numbers(self, n):
        assert len(enumerate_partitions(n, PartitionFamily.distinct())) == DISTINCT_NUMBERS[n]

    def test_reverse_lexicographic(self):
        parts = [p.parts for p in enumerate_partitions(5)]
        assert parts == [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]

    def test_empty_partition_of_zero(self):
        assert enumerate_partitions(0) == [Partition(())]

    def test_negative_rejected(self):
        with pytest.raises(PartitionError):
            enumerate_partitions(-1)

    @pytest.mark.parametrize("family", FAMILIES, ids=str)
    def test_family_matches_filter(self, family):
        for n in range(14):
            fast = enumerate_partitions(n, family)
            assert fast == brute_force_filter(n, family)
            assert len(set(fast)) == len(fast)

    @pytest.mark.slow
    def test_conjugation_invariants_to_twenty_five(self):
        for n in range(26):
            for lam in enumerate_partitions(n):
                conj = lam.conjugate()
                assert conj.conjugate() == lam
                assert conj.size == n
                assert (conj.largest, conj.length) == (lam.length, lam.largest)

    @pytest.mark.slow
    @pytest.mark.parametrize("family", FAMILIES, ids=str)
    def test_family_invariants_to_twenty(self, family):
        for n in range(21):
            members = enumerate_partitions(n, family)
            assert members == brute_force_filter(n, family)
            assert all(family.contains(lam) for lam in members)

    def test_one_repeated_at_eight(self):
        found = [str(p) for p in enumerate_partitions(8, PartitionFamily.exactly_one_repeated())]
        assert found == ["61²", "51³", "4²", "42²", "421²", "41⁴", "3²2", "32²1",
                         "321³", "31⁵", "2⁴", "21⁶", "1⁸"]


class TestGeneratingFunctions:
    """Test weighted generating functions"""

    def test_count_gf(self):
        assert count_gf(PartitionFamily.all(), 10).coeffs == tuple(PARTITION_NUMBERS[:11])

    def test_largest_part_weight(self):
        gf = weighted_gf(PartitionFamily.all(), lambda p: p.largest, 3)
        assert gf.coeffs == (0, 1, 3, 6)

    def test_several_weights_one_pass(self):
        gfs = weighted_gfs(PartitionFamily.distinct(), {
            "count": lambda p: 1,
            "length": lambda p: p.length,
        }, 6)
        assert gfs["count"].coeffs == tuple(DISTINCT_NUMBERS[:7])
        assert gfs["length"].coeffs == (0, 1, 1, 3, 3, 5, 8)


PROFILE_WEIGHTS = {
    "count": lambda p: 1,
    "largest": lambda p: p.largest,
    "length": lambda p: p.length,
    "distinct": lambda p: 2 ** p.distinct_count,
    "signed": lambda p: p.largest * (1 - 2 * (p.odd_count % 2)),
    "rank": lambda p: p.rank,
    "even": lambda p: p.even_count,
}


class TestProfiles:
    """Test whole-slice statistics against per-partition enumeration"""

    @pytest.mark.parametrize("family", [PartitionFamily.all()] + FAMILIES, ids=str)
    def test_profile_gfs_match_enumeration(self, family):
        assert profile_gfs(family, PROFILE_WEIGHTS, 14) == weighted_gfs(family, PROFILE_WEIGHTS, 14)

    @pytest.mark.parametrize("family", [
        PartitionFamily.all(),
        PartitionFamily.distinct(),
        PartitionFamily.no_repeated_odd(),
        PartitionFamily.exactly_one_repeated(),
    ], ids=str)
    def test_slices_are_members_of_that_size(self, family):
        for m, profiles in iter_profiles(family, 10):
            members = enumerate_partitions(m, family)
            assert len(profiles) == len(members)
            assert sorted(profiles.largest.tolist()) == sorted(p.largest for p in members)
            assert sorted(profiles.odd_count.tolist()) == sorted(p.odd_count for p in members)
            assert set(profiles.size.tolist()) <= {m}

    def test_of_reads_partition_statistics(self):
        profiles = PartitionProfiles.of([Partition((5, 3, 3, 1)), Partition((2, 2))])
        assert profiles.size.tolist() == [12, 4]
        assert profiles.distinct_count.tolist() == [3, 1]
        assert profiles.even_count.tolist() == [0, 2]
        assert profiles.rank.tolist() == [1, 0]

    def test_scalar_weight(self):
        gf = profile_gfs(PartitionFamily.distinct(), {"count": lambda p: 3}, 6)["count"]
        assert gf.coeffs == tuple(3 * c for c in DISTINCT_NUMBERS[:7])

    def test_order_zero(self):
        gfs = profile_gfs(PartitionFamily.all(), {"largest": lambda p: p.largest + 1}, 0)
        assert gfs["largest"].coeffs == (1,)

    def test_negative_order(self):
        with pytest.raises(PartitionError):
            list(iter_profiles(PartitionFamily.all(), -1))

    def test_weight_overflow(self):
        with pytest.raises(SeriesOverflowError):
            profile_gfs(PartitionFamily.all(), {"huge": lambda p: p.largest + 2 ** 62}, 5)
