"""
Case Specifications

The six identity rows. Each row fixes a product factor b_j, a summand c_d
and a correction series G in

    sum_{N>=0} [prod_j b_j - prod_{j<=N} b_j] = prod_j b_j * sum_d c_d + G

together with the partition family and weights that interpret both sides:

    tail sum           = prefactor * sum_lambda lhs_weight(lambda) q^N
    prod_j b_j sum c_d = rhs_sign * prefactor * sum_lambda rhs_weight(lambda) q^N

where lhs_weight = statistic * sign and rhs_weight = length * sign.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List, Tuple

from core.partitions import Partition, PartitionFamily
from core.series import TruncatedSeries, binomial_factor, geometric, one
from utils.error_handler import UsageError

SeriesFn = Callable[[int, int], TruncatedSeries]
StatisticFn = Callable[[Partition], int]


class CaseId(Enum):
    I = "i"
    II = "ii"
    III = "iii"
    IV = "iv"
    V = "v"
    VI = "vi"

    @classmethod
    def parse(cls, value) -> "CaseId":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError as e:
            choices = ", ".join(c.value for c in cls)
            raise UsageError(f"unknown case {value!r}; choose from {choices}") from e


@dataclass(frozen=True)
class CaseSpec:
    """One identity row plus its combinatorial reading."""

    case_id: CaseId
    factor: SeriesFn
    factor_valuation: Callable[[int], int]
    summand: SeriesFn
    summand_valuation: Callable[[int], int]
    correction: Callable[[int], TruncatedSeries]
    family: PartitionFamily
    statistic: StatisticFn
    sign: StatisticFn
    rhs_sign: int = 1
    prefactor: Callable[[int], TruncatedSeries] = one
    description: str = ""

    def lhs_weight(self, partition: Partition) -> int:
        return self.statistic(partition) * self.sign(partition)

    def rhs_weight(self, partition: Partition) -> int:
        return partition.length * self.sign(partition)


def _sparse(order: int, terms) -> TruncatedSeries:
    coeffs: Dict[int, int] = {}
    for k, c in terms:
        if k <= order:
            coeffs[k] = coeffs.get(k, 0) + c
    return TruncatedSeries.from_terms(coeffs, order)


def inverse_binomial(sign: int, k: int, order: int) -> TruncatedSeries:
    """1/(1 + sign*q^k) expanded as a geometric series."""
    return _sparse(order, ((m * k, (-sign) ** m) for m in range(order // k + 1)))


def binomial_ratio(top_sign: int, top_k: int, bottom_sign: int, bottom_k: int, order: int) -> TruncatedSeries:
    """(1 + top_sign*q^top_k) / (1 + bottom_sign*q^bottom_k)."""
    return binomial_factor(top_sign, top_k, order).mul(inverse_binomial(bottom_sign, bottom_k, order))


def _odd_multiples(d: int, order: int) -> TruncatedSeries:
    """2q^d/(1-q^(2d)) = 2(q^d + q^(3d) + q^(5d) + ...)."""
    return _sparse(order, ((m * d, 2) for m in range(1, order // d + 1, 2)))


def _signed_geometric(d: int, order: int) -> TruncatedSeries:
    """(-1)^d q^d/(1-q^d)."""
    series = geometric(d, order)
    return series if d % 2 == 0 else series.scale(-1)


def _parity_sign(k):
    """(-1)^k for an int or an integer array."""
    return 1 - 2 * (k % 2)


# Closed forms

def pentagonal_series(order: int) -> TruncatedSeries:
    """1 + sum_{r>=1} (-1)^r [q^(r(3r-1)/2) + q^(r(3r+1)/2)]."""
    terms = [(0, 1)]
    r = 1
    while r * (3 * r - 1) // 2 <= order:
        terms.append((r * (3 * r - 1) // 2, _parity_sign(r)))
        terms.append((r * (3 * r + 1) // 2, _parity_sign(r)))
        r += 1
    return _sparse(order, terms)


def theta_square_series(order: int) -> TruncatedSeries:
    """1 + 2 sum_{r>=1} (-1)^r q^(r^2)."""
    terms = [(0, 1)]
    r = 1
    while r * r <= order:
        terms.append((r * r, 2 * _parity_sign(r)))
        r += 1
    return _sparse(order, terms)


def theta_triangular_series(order: int) -> TruncatedSeries:
    """sum_{r>=0} q^(r(r+1)/2)."""
    terms = []
    r = 0
    while r * (r + 1) // 2 <= order:
        terms.append((r * (r + 1) // 2, 1))
        r += 1
    return _sparse(order, terms)


def triangular_weight_series(order: int) -> TruncatedSeries:
    """sum_{r>=1} r q^(r(r+1)/2)."""
    terms = []
    r = 1
    while r * (r + 1) // 2 <= order:
        terms.append((r * (r + 1) // 2, r))
        r += 1
    return _sparse(order, terms)


def pentagonal_correction(order: int, halved: bool = True, signed: bool = True) -> TruncatedSeries:
    """
    sum_{r>=1} s_r [(3r-1) q^e1 + 3r q^e2] for the printed variants of the case iv correction.

    halved selects exponents r(3r-1)/2, r(3r+1)/2 over r(3r-1), r(3r+1);
    signed selects s_r = (-1)^r over s_r = 1.
    """
    terms = []
    r = 1
    divisor = 2 if halved else 1
    while r * (3 * r - 1) // divisor <= order:
        s = _parity_sign(r) if signed else 1
        terms.append((r * (3 * r - 1) // divisor, s * (3 * r - 1)))
        terms.append((r * (3 * r + 1) // divisor, s * 3 * r))
        r += 1
    return _sparse(order, terms)


def square_correction(order: int) -> TruncatedSeries:
    """4 sum_{r>=1} (-1)^r r q^(r^2)."""
    terms = []
    r = 1
    while r * r <= order:
        terms.append((r * r, 4 * r * _parity_sign(r)))
        r += 1
    return _sparse(order, terms)


def one_minus_q(order: int) -> TruncatedSeries:
    return binomial_factor(-1, 1, order)


def triangular_correction(order: int) -> TruncatedSeries:
    """(1-q) sum_{r>=1} r q^(r(r+1)/2)."""
    return one_minus_q(order).mul(triangular_weight_series(order))


def _zero_correction(order: int) -> TruncatedSeries:
    return TruncatedSeries(order, (0,) * (order + 1))


# The six rows

CASES: Dict[CaseId, CaseSpec] = {
    CaseId.I: CaseSpec(
        case_id=CaseId.I,
        factor=lambda j, order: inverse_binomial(-1, j, order),
        factor_valuation=lambda j: j,
        summand=geometric,
        summand_valuation=lambda d: d,
        correction=_zero_correction,
        family=PartitionFamily.all(),
        statistic=lambda p: p.largest,
        sign=lambda p: 1,
        description="b_j = 1/(1-q^j), c_d = q^d/(1-q^d)",
    ),
    CaseId.II: CaseSpec(
        case_id=CaseId.II,
        factor=lambda j, order: binomial_ratio(1, j, -1, j, order),
        factor_valuation=lambda j: j,
        summand=_odd_multiples,
        summand_valuation=lambda d: d,
        correction=_zero_correction,
        family=PartitionFamily.all(),
        statistic=lambda p: p.largest,
        sign=lambda p: 2 ** p.distinct_count,
        description="b_j = (1+q^j)/(1-q^j), c_d = 2q^d/(1-q^2d)",
    ),
    CaseId.III: CaseSpec(
        case_id=CaseId.III,
        factor=lambda j, order: binomial_ratio(-1, 2 * j - 1, -1, 2 * j, order),
        factor_valuation=lambda j: 2 * j - 1,
        summand=_signed_geometric,
        summand_valuation=lambda d: d,
        correction=_zero_correction,
        family=PartitionFamily.no_repeated_odd(),
        statistic=lambda p: (p.largest + 1) // 2,
        sign=lambda p: _parity_sign(p.odd_count),
        description="b_j = (1-q^(2j-1))/(1-q^2j), c_d = (-1)^d q^d/(1-q^d)",
    ),
    CaseId.IV: CaseSpec(
        case_id=CaseId.IV,
        factor=lambda j, order: binomial_factor(-1, j, order),
        factor_valuation=lambda j: j,
        summand=geometric,
        summand_valuation=lambda d: d,
        correction=pentagonal_correction,
        family=PartitionFamily.distinct(),
        statistic=lambda p: p.largest,
        sign=lambda p: _parity_sign(p.length),
        rhs_sign=-1,
        description="b_j = 1-q^j, c_d = q^d/(1-q^d)",
    ),
    CaseId.V: CaseSpec(
        case_id=CaseId.V,
        factor=lambda j, order: binomial_ratio(-1, j, 1, j, order),
        factor_valuation=lambda j: j,
        summand=_odd_multiples,
        summand_valuation=lambda d: d,
        correction=square_correction,
        family=PartitionFamily.all(),
        statistic=lambda p: p.largest,
        sign=lambda p: _parity_sign(p.length) * 2 ** p.distinct_count,
        rhs_sign=-1,
        description="b_j = (1-q^j)/(1+q^j), c_d = 2q^d/(1-q^2d)",
    ),
    CaseId.VI: CaseSpec(
        case_id=CaseId.VI,
        factor=lambda j, order: binomial_ratio(-1, 2 * j, -1, 2 * j + 1, order),
        factor_valuation=lambda j: 2 * j,
        summand=_signed_geometric,
        summand_valuation=lambda d: d,
        correction=triangular_correction,
        family=PartitionFamily.no_repeated_even(),
        statistic=lambda p: p.largest // 2,
        sign=lambda p: _parity_sign(p.even_count),
        rhs_sign=-1,
        prefactor=one_minus_q,
        description="b_j = (1-q^2j)/(1-q^(2j+1)), c_d = (-1)^d q^d/(1-q^d)",
    ),
}


def get_case(case_id) -> CaseSpec:
    return CASES[CaseId.parse(case_id)]


def g_series(case_id, order: int) -> TruncatedSeries:
    """The correction series G of a case."""
    return get_case(case_id).correction(order)


def g_variants(case_id, order: int) -> List[Tuple[str, TruncatedSeries]]:
    """Every printed form of a case's correction, in the order they are tried."""
    case_id = CaseId.parse(case_id)
    if case_id is CaseId.IV:
        return [
            ("table", pentagonal_correction(order, halved=False, signed=True)),
            ("eq6", pentagonal_correction(order, halved=True, signed=False)),
            ("eq6-with-sign", pentagonal_correction(order, halved=True, signed=True)),
        ]
    return [("table", g_series(case_id, order))]
