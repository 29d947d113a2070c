"""
Partitions

Partition values with the statistics used throughout the identities,
conjugation, the partition families, exhaustive enumeration in
reverse-lexicographic order and weighted generating functions built by
brute force.

The generating functions here never consult the series module's products:
they are the independent side of every comparison.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Tuple, Union

import numpy as np

from utils.error_handler import FamilyViolationError, PartitionError, SeriesOverflowError

from .series import INT64_MAX, TruncatedSeries

logger = logging.getLogger(__name__)

_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")

WeightFn = Callable[["Partition"], int]


@dataclass(frozen=True)
class Partition:
    """
    A non-increasing sequence of positive integers.

    The scalar statistics are computed once, on construction, and stored as
    plain attributes; the multiplicity table is built on first use.
    """

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        for p in parts:
            if isinstance(p, bool) or not isinstance(p, int):
                raise PartitionError(f"parts must be integers, got {p!r}")
            if p < 1:
                raise PartitionError(f"parts must be positive, got {p}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise PartitionError(f"parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)
        self._set_statistics(parts)

    def _set_statistics(self, parts: Tuple[int, ...]) -> None:
        attrs = self.__dict__
        length = len(parts)
        odd = 0
        for p in parts:
            odd += p & 1
        attrs["size"] = sum(parts)
        attrs["length"] = length
        attrs["largest"] = parts[0] if parts else 0
        attrs["smallest"] = parts[-1] if parts else 0
        attrs["distinct_count"] = len(set(parts))
        attrs["odd_count"] = odd
        attrs["even_count"] = length - odd
        attrs["rank"] = attrs["largest"] - length

    @classmethod
    def from_trusted(cls, parts: Tuple[int, ...]) -> "Partition":
        """Wrap parts already known to be valid (enumerators, involutions)."""
        partition = object.__new__(cls)
        object.__setattr__(partition, "parts", parts)
        partition._set_statistics(parts)
        return partition

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """
        Parse "8,7,5" or "8 7 5"; "" and "∅" give the empty partition.

        Raises:
            PartitionError: Non-numeric, non-positive or increasing parts
        """
        text = text.strip()
        if text in ("", "∅"):
            return cls(())
        tokens = [t for t in text.replace(",", " ").split() if t]
        try:
            parts = tuple(int(t) for t in tokens)
        except ValueError as e:
            raise PartitionError(f"cannot parse partition {text!r}") from e
        return cls(parts)

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> "Partition":
        return cls(tuple(data["parts"]))

    def to_dict(self) -> Dict[str, List[int]]:
        return {"parts": list(self.parts)}

    # Statistics: size (N), length (n), largest, smallest, distinct_count,
    # odd_count, even_count and rank are attributes set on construction.

    @property
    def multiplicities(self) -> Dict[int, int]:
        table = self.__dict__.get("_multiplicities")
        if table is None:
            table = dict(Counter(self.parts))
            self.__dict__["_multiplicities"] = table
        return table

    def n_at(self, d: int) -> int:
        """Number of parts equal to d."""
        return self.multiplicities.get(d, 0)

    def conjugate(self) -> "Partition":
        """Transpose of the Ferrers diagram."""
        parts = self.parts
        conj = []
        k = len(parts)
        for column in range(1, self.largest + 1):
            while k and parts[k - 1] < column:
                k -= 1
            conj.append(k)
        return Partition.from_trusted(tuple(conj))

    def is_empty(self) -> bool:
        return not self.parts

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        if not self.parts:
            return "∅"
        pieces = []
        for part, mult in self.multiplicities.items():
            piece = str(part)
            if mult > 1:
                piece += str(mult).translate(_SUPERSCRIPTS)
            pieces.append(piece)
        separator = "," if self.largest >= 10 else ""
        return separator.join(pieces)


@dataclass(frozen=True)
class PartitionStats:
    """Snapshot of a partition's statistics."""
    size: int
    length: int
    largest: int
    multiplicities: Dict[int, int]
    distinct_count: int
    odd_count: int
    even_count: int
    rank: int

    def n_at(self, d: int) -> int:
        return self.multiplicities.get(d, 0)


def partition_stats(partition: Partition) -> PartitionStats:
    return PartitionStats(
        size=partition.size,
        length=partition.length,
        largest=partition.largest,
        multiplicities=dict(partition.multiplicities),
        distinct_count=partition.distinct_count,
        odd_count=partition.odd_count,
        even_count=partition.even_count,
        rank=partition.rank,
    )


def conjugate(partition: Partition) -> Partition:
    return partition.conjugate()


class FamilyKind(Enum):
    """Partition classes the identities sum over."""
    ALL = "all"
    DISTINCT = "distinct"
    NO_REPEATED_ODD = "no-repeated-odd"
    NO_REPEATED_EVEN = "no-repeated-even"
    EXACTLY_ONE_REPEATED = "exactly-one-repeated"
    DISTINCT_CONTAINING = "distinct-containing"
    ONLY_REPEAT_IS = "only-repeat-is"
    COMPLETE_UP_TO = "complete-up-to"


_PARAMETERIZED = {FamilyKind.DISTINCT_CONTAINING, FamilyKind.ONLY_REPEAT_IS,
                  FamilyKind.COMPLETE_UP_TO}


@dataclass(frozen=True)
class PartitionFamily:
    """A family tag plus its integer parameter where the kind takes one."""

    kind: FamilyKind
    parameter: Optional[int] = None

    def __post_init__(self):
        if self.kind in _PARAMETERIZED:
            if self.parameter is None:
                raise PartitionError(f"{self.kind.value} needs a parameter")
            minimum = 0 if self.kind is FamilyKind.COMPLETE_UP_TO else 1
            if self.parameter < minimum:
                raise PartitionError(
                    f"{self.kind.value} parameter must be at least {minimum}, got {self.parameter}"
                )
        elif self.parameter is not None:
            raise PartitionError(f"{self.kind.value} takes no parameter")

    @classmethod
    def all(cls) -> "PartitionFamily":
        return cls(FamilyKind.ALL)

    @classmethod
    def distinct(cls) -> "PartitionFamily":
        return cls(FamilyKind.DISTINCT)

    @classmethod
    def no_repeated_odd(cls) -> "PartitionFamily":
        return cls(FamilyKind.NO_REPEATED_ODD)

    @classmethod
    def no_repeated_even(cls) -> "PartitionFamily":
        return cls(FamilyKind.NO_REPEATED_EVEN)

    @classmethod
    def exactly_one_repeated(cls) -> "PartitionFamily":
        return cls(FamilyKind.EXACTLY_ONE_REPEATED)

    @classmethod
    def distinct_containing(cls, d: int) -> "PartitionFamily":
        return cls(FamilyKind.DISTINCT_CONTAINING, d)

    @classmethod
    def only_repeat_is(cls, d: int) -> "PartitionFamily":
        return cls(FamilyKind.ONLY_REPEAT_IS, d)

    @classmethod
    def complete_up_to(cls, n: int) -> "PartitionFamily":
        return cls(FamilyKind.COMPLETE_UP_TO, n)

    def contains(self, partition: Partition) -> bool:
        """Membership predicate, decided from the parts alone."""
        mult = partition.multiplicities
        kind = self.kind
        if kind is FamilyKind.ALL:
            return True
        if kind is FamilyKind.DISTINCT:
            return all(m == 1 for m in mult.values())
        if kind is FamilyKind.NO_REPEATED_ODD:
            return all(m == 1 for p, m in mult.items() if p % 2)
        if kind is FamilyKind.NO_REPEATED_EVEN:
            return all(m == 1 for p, m in mult.items() if p % 2 == 0)
        if kind is FamilyKind.EXACTLY_ONE_REPEATED:
            return sum(1 for m in mult.values() if m > 1) == 1
        if kind is FamilyKind.DISTINCT_CONTAINING:
            return self.parameter in mult and all(m == 1 for m in mult.values())
        if kind is FamilyKind.ONLY_REPEAT_IS:
            d = self.parameter
            return mult.get(d, 0) >= 2 and all(m == 1 for p, m in mult.items() if p != d)
        if kind is FamilyKind.COMPLETE_UP_TO:
            return set(mult) == set(range(1, self.parameter + 1))
        raise PartitionError(f"unknown family {kind}")

    def require(self, partition: Partition) -> None:
        """Raise FamilyViolationError unless the partition is a member."""
        if not self.contains(partition):
            raise FamilyViolationError(f"{partition} is not in {self}")

    def _max_multiplicity(self, value: int) -> Optional[int]:
        kind = self.kind
        if kind in (FamilyKind.DISTINCT, FamilyKind.DISTINCT_CONTAINING):
            return 1
        if kind is FamilyKind.NO_REPEATED_ODD:
            return 1 if value % 2 else None
        if kind is FamilyKind.NO_REPEATED_EVEN:
            return None if value % 2 else 1
        if kind is FamilyKind.ONLY_REPEAT_IS:
            return None if value == self.parameter else 1
        return None

    def _min_multiplicity(self, value: int) -> int:
        if self.kind is FamilyKind.ONLY_REPEAT_IS and value == self.parameter:
            return 2
        return 1

    def __str__(self) -> str:
        name = "".join(word.capitalize() for word in self.kind.value.split("-"))
        if self.parameter is not None:
            return f"{name}({self.parameter})"
        return name


def _zs1(n: int) -> Iterator[Tuple[int, ...]]:
    """All partitions of n in reverse-lexicographic order (ZS1, constant amortized time)."""
    if n == 0:
        yield ()
        return
    x = [1] * n
    x[0] = n
    m = 1  # number of parts
    h = 1  # index (1-based) of the last part greater than 1
    yield (n,)
    while x[0] != 1:
        if x[h - 1] == 2:
            m += 1
            x[h - 1] = 1
            h -= 1
        else:
            r = x[h - 1] - 1
            t = m - h + 1
            x[h - 1] = r
            while t >= r:
                h += 1
                x[h - 1] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h - 1] = t
        yield tuple(x[:m])


def _restricted(n: int, family: PartitionFamily) -> Iterator[Tuple[int, ...]]:
    """
    Descending-value recursion with per-value multiplicity caps.

    Values are tried largest first and, for each value, multiplicities largest
    first, which produces reverse-lexicographic order.
    """
    repeat_budget = 1 if family.kind is FamilyKind.EXACTLY_ONE_REPEATED else None
    complete = family.kind is FamilyKind.COMPLETE_UP_TO
    prefix: List[int] = []

    def extend(remaining: int, below: int, repeats_left: Optional[int]):
        if remaining == 0:
            if not complete or below == 1:
                yield tuple(prefix)
            return
        if complete:
            candidates = [below - 1] if below - 1 >= 1 else []
        else:
            candidates = range(min(below - 1, remaining), 0, -1)
        for value in candidates:
            cap = family._max_multiplicity(value)
            top = remaining // value if cap is None else min(cap, remaining // value)
            if repeats_left == 0:
                top = min(top, 1)
            for mult in range(top, family._min_multiplicity(value) - 1, -1):
                prefix.extend([value] * mult)
                next_repeats = repeats_left
                if repeats_left is not None and mult > 1:
                    next_repeats = repeats_left - 1
                yield from extend(remaining - mult * value, value, next_repeats)
                del prefix[-mult:]

    if complete:
        top_value = family.parameter
        if top_value == 0:
            if n == 0:
                yield ()
            return
        yield from extend(n, top_value + 1, None)
    else:
        yield from extend(n, n + 1, repeat_budget)


def iter_partitions(n: int, family: Optional[PartitionFamily] = None) -> Iterator[Partition]:
    """Lazily yield the partitions of n in the family, reverse-lexicographically."""
    if n < 0:
        raise PartitionError(f"cannot partition a negative number {n}")
    family = family or PartitionFamily.all()
    if family.kind is FamilyKind.ALL:
        for parts in _zs1(n):
            yield Partition.from_trusted(parts)
        return
    for parts in _restricted(n, family):
        partition = Partition.from_trusted(parts)
        if family.contains(partition):
            yield partition


def enumerate_partitions(n: int, family: Optional[PartitionFamily] = None) -> List[Partition]:
    """
    All partitions of n in the family, each once, in reverse-lexicographic order.

    Args:
        n: Non-negative integer to partition
        family: Partition family, the unrestricted family by default

    Returns:
        List of partitions
    """
    return list(iter_partitions(n, family))


def brute_force_filter(n: int, family: PartitionFamily) -> List[Partition]:
    """Members of the family obtained by filtering every partition of n."""
    return [p for p in iter_partitions(n) if family.contains(p)]


def weighted_gfs(family: PartitionFamily, weights: Mapping[str, WeightFn],
                 order: int) -> Dict[str, TruncatedSeries]:
    """
    Several weighted generating functions from one pass over the family.

    The coefficient of q^m in result[name] is the sum of weights[name](λ) over
    members λ of size m.
    """
    names = list(weights)
    fns = [weights[name] for name in names]
    columns = {name: [0] * (order + 1) for name in names}
    count = 0
    for m in range(order + 1):
        totals = [0] * len(fns)
        for partition in iter_partitions(m, family):
            count += 1
            for i, fn in enumerate(fns):
                totals[i] += fn(partition)
        for name, total in zip(names, totals):
            columns[name][m] = total
    logger.debug(f"weighted {len(names)} functions over {count} partitions of {family} up to {order}")
    return {name: TruncatedSeries(order, tuple(coeffs)) for name, coeffs in columns.items()}


def weighted_gf(family: PartitionFamily, weight: WeightFn, order: int) -> TruncatedSeries:
    """Sum of weight(λ) q^N(λ) over the family, truncated at order."""
    return weighted_gfs(family, {"weight": weight}, order)["weight"]


def count_gf(family: PartitionFamily, order: int) -> TruncatedSeries:
    """Plain generating function of the family."""
    return weighted_gf(family, lambda _: 1, order)


# Profile tables: the enumeration with the statistics held in numpy arrays

ProfileWeightFn = Callable[["PartitionProfiles"], Union[np.ndarray, int]]

# Families decided by a multiplicity cap per part value.
_CAPPED = (FamilyKind.ALL, FamilyKind.DISTINCT, FamilyKind.NO_REPEATED_ODD,
           FamilyKind.NO_REPEATED_EVEN)


@dataclass(frozen=True, eq=False)
class PartitionProfiles:
    """
    Statistics of a batch of partitions, one array entry per partition.

    Attribute names match Partition, so weight functions written with
    arithmetic (no branching on the value) evaluate on either.
    """

    size: np.ndarray
    length: np.ndarray
    largest: np.ndarray
    distinct_count: np.ndarray
    odd_count: np.ndarray

    @property
    def even_count(self) -> np.ndarray:
        return self.length - self.odd_count

    @property
    def rank(self) -> np.ndarray:
        return self.largest - self.length

    def __len__(self) -> int:
        return len(self.size)

    @classmethod
    def of(cls, partitions: List[Partition]) -> "PartitionProfiles":
        def column(name: str) -> np.ndarray:
            return np.fromiter((getattr(p, name) for p in partitions), dtype=np.int64,
                               count=len(partitions))
        return cls(column("size"), column("length"), column("largest"),
                   column("distinct_count"), column("odd_count"))


class _PrefixTable:
    """
    Every member of a capped family whose parts are all at least 2.

    Each member of size m is one of these prefixes followed by m - size ones,
    so a size slice needs only a mask over the prefixes.
    """

    def __init__(self, family: PartitionFamily, order: int):
        caps = [None] + [family._max_multiplicity(v) for v in range(1, order + 1)]
        size: List[int] = []
        length: List[int] = []
        largest: List[int] = []
        distinct: List[int] = []
        odd: List[int] = []

        def descend(below: int, n: int, count: int, top: int, kinds: int, odds: int) -> None:
            size.append(n)
            length.append(count)
            largest.append(top)
            distinct.append(kinds)
            odd.append(odds)
            room = order - n
            for value in range(min(below - 1, room), 1, -1):
                most = room // value
                cap = caps[value]
                if cap is not None and cap < most:
                    most = cap
                parity = value & 1
                for mult in range(1, most + 1):
                    descend(value, n + mult * value, count + mult, top or value,
                            kinds + 1, odds + parity * mult)

        descend(order + 1, 0, 0, 0, 0, 0)
        self.ones_cap = caps[1] if order >= 1 else None
        self.size = np.array(size, dtype=np.int64)
        self.length = np.array(length, dtype=np.int64)
        self.largest = np.array(largest, dtype=np.int64)
        self.distinct = np.array(distinct, dtype=np.int64)
        self.odd = np.array(odd, dtype=np.int64)

    def slice(self, m: int) -> PartitionProfiles:
        """Profiles of the members of size exactly m."""
        ones = m - self.size
        mask = ones >= 0
        if self.ones_cap is not None:
            mask &= ones <= self.ones_cap
        ones = ones[mask]
        has_ones = (ones > 0).astype(np.int64)
        largest = self.largest[mask]
        return PartitionProfiles(
            size=np.full(len(ones), m, dtype=np.int64),
            length=self.length[mask] + ones,
            largest=np.maximum(largest, has_ones),
            distinct_count=self.distinct[mask] + has_ones,
            odd_count=self.odd[mask] + ones,
        )


def iter_profiles(family: PartitionFamily, order: int) -> Iterator[Tuple[int, PartitionProfiles]]:
    """(m, profiles of every member of size m) for m = 0..order."""
    if order < 0:
        raise PartitionError(f"order must be non-negative, got {order}")
    if family.kind in _CAPPED:
        table = _PrefixTable(family, order)
        for m in range(order + 1):
            yield m, table.slice(m)
        return
    for m in range(order + 1):
        yield m, PartitionProfiles.of(enumerate_partitions(m, family))


def _weight_total(value, count: int, name: str, m: int) -> int:
    array = np.asarray(value, dtype=np.int64)
    if array.ndim == 0:
        return int(array) * count
    if count and int(np.abs(array).max()) > INT64_MAX // count:
        raise SeriesOverflowError(f"weight {name} too large to sum at q^{m}", exponent=m)
    return int(array.sum(dtype=np.int64))


def profile_gfs(family: PartitionFamily, weights: Mapping[str, ProfileWeightFn],
                order: int) -> Dict[str, TruncatedSeries]:
    """
    Weighted generating functions with every weight applied to whole size slices.

    Same result as weighted_gfs for weights that only read the profile
    statistics and are written without branching, e.g. ``lambda p: p.largest * (-1) ** p.length``.
    """
    columns = {name: [0] * (order + 1) for name in weights}
    count = 0
    for m, profiles in iter_profiles(family, order):
        members = len(profiles)
        count += members
        for name, fn in weights.items():
            columns[name][m] = _weight_total(fn(profiles), members, name, m)
    logger.debug(f"weighted {len(weights)} profile functions over {count} partitions of {family} up to {order}")
    return {name: TruncatedSeries(order, tuple(coeffs)) for name, coeffs in columns.items()}
