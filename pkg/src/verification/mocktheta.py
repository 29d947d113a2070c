"""
Mock Theta Identity

Verification of the fourth-order mock theta identity

    sum_{N>=0} [prod_j (1+q^j) - prod_{j<=N} (1+q^j)]
        = prod_j (1+q^j) [-1/2 + sum_d q^d/(1-q^d)]
          + 1/2 sum_{n>=0} prod_{j<=n} q^j/(1+q^j)

and of the rank identity it distils to: the sum of ceil(r/2) over partitions
into distinct parts equals the number of partitions with exactly one
repeated part. Everything is computed on the doubled identity so that all
coefficients stay integral.
"""

import logging
import time
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Tuple

import pandas as pd

from core.partitions import Partition, PartitionFamily, count_gf, iter_partitions, weighted_gf, weighted_gfs
from core.series import (
    TruncatedSeries,
    binomial_factor,
    geometric,
    monomial,
    one,
    product_converging,
    sum_converging,
    zero,
)
from utils.enhanced_logger import VerificationLogger

from .case_specs import inverse_binomial
from .identities import lemma_form, tail_sum
from .reports import CheckResult, VerificationReport, check_equal, compare_routes

logger = logging.getLogger(__name__)
events = VerificationLogger(__name__)

IDENTITY_ROUTES = ["tail", "lemma", "comb-lhs", "series-rhs", "comb-rhs"]
RANK_ROUTES = ["rank-sum", "one-repeat", "series"]

# Bounds for the auxiliary enumeration checks.
DECOMPOSITION_MAX_D = 6
COMPLETE_MAX_N = 6
AUXILIARY_MAX_ORDER = 30


class CatalogSide(Enum):
    DISTINCT_WITH_RANK_WEIGHT = "distinct_with_rank_weight"
    ONE_REPEATED = "one_repeated"


@dataclass(frozen=True)
class RankCatalogEntry:
    """One object of the rank identity at a fixed size."""

    side: CatalogSide
    partition: Partition
    multiplicity: int
    rank: int

    def to_dict(self) -> Dict[str, object]:
        return {
            "side": self.side.value,
            "partition": list(self.partition.parts),
            "multiplicity": self.multiplicity,
            "rank": self.rank,
        }


def _half_up(k: int) -> int:
    return (k + 1) // 2


def _identity_valuation(j: int) -> int:
    return j


def _distinct_factor(j: int, order: int) -> TruncatedSeries:
    return binomial_factor(1, j, order)


def distinct_product(order: int) -> TruncatedSeries:
    """prod_{j>=1} (1+q^j)."""
    return product_converging(_distinct_factor, _identity_valuation, order)


def _divisor_sum(order: int) -> TruncatedSeries:
    return sum_converging(geometric, _identity_valuation, order)


def shifted_quotient(n: int, order: int) -> TruncatedSeries:
    """prod_{j<=n} q^j/(1+q^j)."""
    result = one(order)
    for j in range(1, n + 1):
        if j * (j + 1) // 2 > order:
            return zero(order)
        result = result.mul(monomial(1, j, order)).mul(inverse_binomial(1, j, order))
    return result


def shifted_quotient_sum(order: int) -> TruncatedSeries:
    """sum_{n>=0} prod_{j<=n} q^j/(1+q^j); term n has valuation n(n+1)/2."""
    total = zero(order)
    running = one(order)
    n = 0
    while n * (n + 1) // 2 <= order:
        if n:
            running = running.mul(monomial(1, n, order)).mul(inverse_binomial(1, n, order))
        total = total.add(running)
        n += 1
    return total


# Rank identity

def rank_sum_series(order: int) -> TruncatedSeries:
    """sum over distinct-part partitions of ceil(rank/2) q^N."""
    return weighted_gf(PartitionFamily.distinct(), lambda lam: _half_up(lam.rank), order)


def one_repeat_series(order: int) -> TruncatedSeries:
    """Generating function of partitions with exactly one repeated part."""
    return count_gf(PartitionFamily.exactly_one_repeated(), order)


def divisor_product_series(order: int) -> TruncatedSeries:
    """prod_j (1+q^j) * sum_d q^d/(1-q^d)."""
    return distinct_product(order).mul(_divisor_sum(order))


def decomposition_check(d: int, order: int) -> CheckResult:
    """
    prod_j (1+q^j) q^d/(1-q^d) against the distinct partitions containing d
    plus twice the partitions whose only repeated part is d.
    """
    left = distinct_product(order).mul(geometric(d, order))
    right = count_gf(PartitionFamily.distinct_containing(d), order).add(
        count_gf(PartitionFamily.only_repeat_is(d), order).scale(2))
    return check_equal(f"decomposition-{d}", left, right)


def complete_up_to_check(n: int, order: int) -> CheckResult:
    """prod_{j<=n} q^j/(1+q^j) against the signed partitions using exactly the parts 1..n."""
    family = PartitionFamily.complete_up_to(n)
    right = weighted_gf(family, lambda lam: -1 if (lam.length - n) % 2 else 1, order)
    return check_equal(f"complete-up-to-{n}", shifted_quotient(n, order), right)


def _distinct_columns(order: int) -> Dict[str, TruncatedSeries]:
    return weighted_gfs(PartitionFamily.distinct(), {
        "largest": lambda lam: lam.largest,
        "length": lambda lam: lam.length,
        "count": lambda lam: 1,
        "rank-parity": lambda lam: -1 if lam.rank % 2 else 1,
    }, order)


def _auxiliary_checks(order: int, distinct: Dict[str, TruncatedSeries],
                      one_repeat: TruncatedSeries) -> List[CheckResult]:
    checks = [
        check_equal("conjugate-sum", shifted_quotient_sum(order), distinct["rank-parity"]),
        check_equal("divisor-product", divisor_product_series(order),
                    distinct["length"].add(one_repeat.scale(2))),
    ]
    small = min(order, AUXILIARY_MAX_ORDER)
    for d in range(1, DECOMPOSITION_MAX_D + 1):
        checks.append(decomposition_check(d, small))
    for n in range(COMPLETE_MAX_N + 1):
        checks.append(complete_up_to_check(n, small))
    return checks


def _report(name: str, order: int, routes: Dict[str, TruncatedSeries],
            checks: List[CheckResult], started: float) -> VerificationReport:
    mismatch = compare_routes(routes)
    if mismatch is not None:
        reference = next(iter(routes))
        expected = mismatch.values[reference]
        other = next(r for r, v in mismatch.values.items() if v != expected)
        events.log_mismatch(name, reference, other, mismatch.exponent,
                            expected, mismatch.values[other])
    report = VerificationReport(
        case_id=name,
        order=order,
        routes=list(routes),
        equal=mismatch is None,
        first_mismatch=mismatch,
        checks=checks,
        doubled=True,
        elapsed_seconds=time.perf_counter() - started,
    )
    logger.info(f"{name}: {'PASS' if report.passed else 'FAIL'} in {report.elapsed_seconds:.2f}s")
    return report


def verify_identity9(order: int) -> VerificationReport:
    """
    Verify the doubled mock theta identity by five routes.

    Args:
        order: Truncation order

    Returns:
        VerificationReport with doubled=True
    """
    started = time.perf_counter()
    logger.info(f"verifying mock theta identity to q^{order}")
    distinct = _distinct_columns(order)
    one_repeat = one_repeat_series(order)
    product = distinct_product(order)

    routes: Dict[str, TruncatedSeries] = {
        "tail": tail_sum(_distinct_factor, _identity_valuation, order).scale(2),
        "lemma": lemma_form(_distinct_factor, _identity_valuation, order).scale(2),
        "comb-lhs": distinct["largest"].scale(2),
        "series-rhs": (product.mul(_divisor_sum(order)).scale(2)
                       .sub(product).add(shifted_quotient_sum(order))),
        "comb-rhs": (distinct["length"].add(one_repeat.scale(2)).scale(2)
                     .sub(distinct["count"]).add(distinct["rank-parity"])),
    }
    return _report("mock9", order, routes, _auxiliary_checks(order, distinct, one_repeat), started)


def verify_rank(order: int) -> VerificationReport:
    """
    Verify the rank identity three ways, doubled: twice the rank-weighted sum,
    twice the one-repeat count, and the series prod(1+q^j) sum q^d/(1-q^d)
    minus the part-count generating function of distinct partitions.
    """
    started = time.perf_counter()
    logger.info(f"verifying rank identity to q^{order}")
    distinct = _distinct_columns(order)
    routes = {
        "rank-sum": rank_sum_series(order).scale(2),
        "one-repeat": one_repeat_series(order).scale(2),
        "series": divisor_product_series(order).sub(distinct["length"]),
    }
    small = min(order, AUXILIARY_MAX_ORDER)
    checks = [decomposition_check(d, small) for d in range(1, DECOMPOSITION_MAX_D + 1)]
    return _report("rank", order, routes, checks, started)


# Catalogs

def _reverse_lex(entries: List[RankCatalogEntry]) -> List[RankCatalogEntry]:
    return sorted(entries, key=lambda e: e.partition.parts, reverse=True)


def catalog(n: int) -> List[RankCatalogEntry]:
    """
    Both sides of the rank identity at size n, left side first.

    The left side lists distinct-part partitions with their weight
    ceil(rank/2), omitting weight zero; the right side lists partitions with
    exactly one repeated part, each with multiplicity 1.
    """
    left = [
        RankCatalogEntry(CatalogSide.DISTINCT_WITH_RANK_WEIGHT, lam, _half_up(lam.rank), lam.rank)
        for lam in iter_partitions(n, PartitionFamily.distinct())
        if _half_up(lam.rank) > 0
    ]
    right = [
        RankCatalogEntry(CatalogSide.ONE_REPEATED, lam, 1, lam.rank)
        for lam in iter_partitions(n, PartitionFamily.exactly_one_repeated())
    ]
    entries = _reverse_lex(left) + _reverse_lex(right)
    left_total, right_total = catalog_totals(entries)
    events.log_catalog(n, left_total, right_total)
    return entries


def catalog_totals(entries: List[RankCatalogEntry]) -> Tuple[int, int]:
    left = sum(e.multiplicity for e in entries if e.side is CatalogSide.DISTINCT_WITH_RANK_WEIGHT)
    right = sum(e.multiplicity for e in entries if e.side is CatalogSide.ONE_REPEATED)
    return left, right


def catalog_tables(entries: List[RankCatalogEntry]) -> Tuple[pd.DataFrame, pd.DataFrame]:
    """The left table (λ, r, ceil(r/2)) and the right list as DataFrames."""
    left = pd.DataFrame(
        [{"λ": str(e.partition), "r": e.rank, "⌈r/2⌉": e.multiplicity}
         for e in entries if e.side is CatalogSide.DISTINCT_WITH_RANK_WEIGHT],
        columns=["λ", "r", "⌈r/2⌉"],
    )
    right = pd.DataFrame(
        [{"λ": str(e.partition)} for e in entries if e.side is CatalogSide.ONE_REPEATED],
        columns=["λ"],
    )
    return left, right


def format_catalog(n: int, entries: List[RankCatalogEntry]) -> str:
    left, right = catalog_tables(entries)
    left_total, right_total = catalog_totals(entries)
    lines = [f"rank catalog for N={n}", "", "distinct parts, weighted by ceil(r/2):"]
    lines.extend("  " + line for line in (left.to_string(index=False) if len(left) else "(none)").splitlines())
    lines.append(f"  total: {left_total}")
    lines.append("")
    lines.append("exactly one repeated part:")
    lines.append("  " + (" ".join(right["λ"]) if len(right) else "(none)"))
    lines.append(f"  total: {right_total}")
    status = "equal" if left_total == right_total else "DIFFER"
    lines.append("")
    lines.append(f"totals {left_total} and {right_total}: {status}")
    return "\n".join(lines)
