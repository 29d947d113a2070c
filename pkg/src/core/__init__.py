"""
Core Package

Exact truncated power series and integer partitions.
"""

from .series import (
    TruncatedSeries,
    zero,
    one,
    monomial,
    geometric,
    product_converging,
    sum_converging,
)
from .partitions import (
    Partition,
    PartitionFamily,
    FamilyKind,
    enumerate_partitions,
    weighted_gf,
    weighted_gfs,
    PartitionProfiles,
    iter_profiles,
    profile_gfs,
)

__all__ = [
    'TruncatedSeries',
    'zero',
    'one',
    'monomial',
    'geometric',
    'product_converging',
    'sum_converging',
    'Partition',
    'PartitionFamily',
    'FamilyKind',
    'enumerate_partitions',
    'weighted_gf',
    'weighted_gfs',
    'PartitionProfiles',
    'iter_profiles',
    'profile_gfs'
]
