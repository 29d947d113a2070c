"""
Identity Verification

Computes both sides of every identity row by independent routes and compares
them coefficient by coefficient:

- tail: the defining sum of (full product - partial product)
- lemma: sum of n a_n prod_{j<n} b_j with a_n = b_n - 1
- subset: sum over finite index sets S of max(S) prod_{j in S} a_j
- comb-lhs: weighted enumeration of the family, times the prefactor
- series-rhs: product of the factors times the sum of the summands, plus G
- comb-rhs: weighted enumeration read through the row's sign, plus G

Mismatches are report outcomes, never exceptions.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence

from combinatorics.involutions import Exceptional, ExceptionalKind
from core.partitions import Partition, profile_gfs, weighted_gf
from core.series import (
    FactorFn,
    TruncatedSeries,
    ValuationFn,
    indices_within,
    one,
    partial_products,
    product_converging,
    sum_converging,
    zero,
)
from utils.enhanced_logger import VerificationLogger, log_function_calls

from .case_specs import (
    CaseId,
    CaseSpec,
    binomial_ratio,
    g_series,
    g_variants,
    get_case,
    one_minus_q,
    pentagonal_series,
    theta_square_series,
    theta_triangular_series,
    triangular_weight_series,
)
from .reports import CheckResult, VerificationReport, check_equal, compare_routes

logger = logging.getLogger(__name__)
events = VerificationLogger(__name__)

ROUTES = ["tail", "lemma", "subset", "comb-lhs", "series-rhs", "comb-rhs"]


def _timed(case: str, route: str, order: int, compute: Callable[[], object]):
    start = time.perf_counter()
    result = compute()
    events.log_route(case, route, order, time.perf_counter() - start)
    return result


# Generic left-hand side routes

def tail_sum(factor: FactorFn, valuation: ValuationFn, order: int) -> TruncatedSeries:
    """
    sum_{N>=0} [prod_{j>=1} b_j - prod_{j<=N} b_j] modulo q^(order+1).

    Once N reaches the last index whose factor is not congruent to 1, the
    partial product equals the full product and every later term is zero.
    """
    full = product_converging(factor, valuation, order)
    total = zero(order)
    prefix = one(order)
    for _, partial in partial_products(factor, valuation, order):
        total = total.add(full.sub(prefix))
        prefix = partial
    return total


def lemma_form(factor: FactorFn, valuation: ValuationFn, order: int) -> TruncatedSeries:
    """sum_{n>=1} n a_n prod_{j<n} (1 + a_j) with a_n = b_n - 1."""
    total = zero(order)
    prefix = one(order)
    for n, _ in indices_within(valuation, order, "factor"):
        b = factor(n, order)
        a = b.sub(one(order))
        total = total.add(a.mul(prefix).scale(n))
        prefix = prefix.mul(b)
    return total


def subset_form(factor: FactorFn, valuation: ValuationFn, order: int) -> TruncatedSeries:
    """
    sum over finite nonempty index sets S of max(S) prod_{j in S} a_j.

    Sets whose valuations add up past the order contribute nothing; since
    valuations are nondecreasing the search stops at the first such index.
    """
    terms = [(j, factor(j, order).sub(one(order)), v)
             for j, v in indices_within(valuation, order, "factor")]
    total = zero(order)

    def extend(start: int, product: TruncatedSeries, used: int) -> None:
        nonlocal total
        for index in range(start, len(terms)):
            j, a, v = terms[index]
            if used + v > order:
                break
            extended = product.mul(a)
            if extended.is_zero():
                continue
            total = total.add(extended.scale(j))
            extend(index + 1, extended, used + v)

    extend(0, one(order), 0)
    return total


# Case routes

def lhs_tail_sum(spec: CaseSpec, order: int) -> TruncatedSeries:
    return tail_sum(spec.factor, spec.factor_valuation, order)


def lhs_lemma_form(spec: CaseSpec, order: int) -> TruncatedSeries:
    return lemma_form(spec.factor, spec.factor_valuation, order)


def lhs_subset_form(spec: CaseSpec, order: int) -> TruncatedSeries:
    return subset_form(spec.factor, spec.factor_valuation, order)


def product_side(spec: CaseSpec, order: int) -> TruncatedSeries:
    """prod_j b_j * sum_d c_d, the right-hand side without its correction."""
    product = product_converging(spec.factor, spec.factor_valuation, order)
    summands = sum_converging(spec.summand, spec.summand_valuation, order)
    return product.mul(summands)


def rhs(spec: CaseSpec, order: int) -> TruncatedSeries:
    return product_side(spec, order).add(spec.correction(order))


def combinatorial_sides(spec: CaseSpec, order: int) -> Dict[str, TruncatedSeries]:
    """Both weighted generating functions from a single pass over the family."""
    return profile_gfs(spec.family, {"lhs": spec.lhs_weight, "rhs": spec.rhs_weight}, order)


def combinatorial_side(spec: CaseSpec, side: str, order: int) -> TruncatedSeries:
    """
    Weighted generating function of the family for one side.

    Args:
        spec: Case specification
        side: "lhs" (statistic times sign) or "rhs" (length times sign)
        order: Truncation order
    """
    weights = {"lhs": spec.lhs_weight, "rhs": spec.rhs_weight}
    if side not in weights:
        raise ValueError(f"side must be 'lhs' or 'rhs', got {side!r}")
    return profile_gfs(spec.family, {side: weights[side]}, order)[side]


# Auxiliary identities

def _triangular_factor(j: int, order: int) -> TruncatedSeries:
    """(1-q^2j)/(1-q^(2j-1))."""
    return binomial_ratio(-1, 2 * j, -1, 2 * j - 1, order)


def triangular_product(order: int) -> TruncatedSeries:
    return product_converging(_triangular_factor, lambda j: 2 * j - 1, order)


def _euler_product(order: int) -> TruncatedSeries:
    return product_converging(get_case(CaseId.IV).factor, lambda j: j, order)


def _theta_product(order: int) -> TruncatedSeries:
    return product_converging(get_case(CaseId.V).factor, lambda j: j, order)


# name -> (product, closed form)
_PRODUCT_IDENTITIES = {
    "pentagonal-product": (_euler_product, pentagonal_series),
    "theta-square-product": (_theta_product, theta_square_series),
    "triangular-product": (triangular_product, theta_triangular_series),
}

_CASE_PRODUCT = {
    CaseId.IV: "pentagonal-product",
    CaseId.V: "theta-square-product",
    CaseId.VI: "triangular-product",
}


def product_identity(name: str, order: int) -> CheckResult:
    """One of the classical product factorizations against its theta series."""
    product, closed_form = _PRODUCT_IDENTITIES[name]
    return check_equal(name, product(order), closed_form(order))


_EXCEPTIONAL_KINDS = {
    CaseId.IV: (ExceptionalKind.PENTAGONAL_A, ExceptionalKind.PENTAGONAL_B),
    CaseId.V: (ExceptionalKind.SQUARE,),
    CaseId.VI: (ExceptionalKind.STAIRCASE_ODD, ExceptionalKind.STAIRCASE_EVEN),
}


def exceptional_partitions(case_id, order: int) -> List[Partition]:
    """The unpaired partitions of a case with size at most order, by size."""
    case_id = CaseId.parse(case_id)
    found = [Partition(())]
    for kind in _EXCEPTIONAL_KINDS.get(case_id, ()):
        r = 1
        while Exceptional(kind, r).size <= order:
            found.append(Exceptional(kind, r).partition())
            r += 1
    return sorted(found, key=lambda p: (p.size, p.parts))


def exceptional_sum(case_id, order: int) -> TruncatedSeries:
    """prefactor * sum over exceptional λ of (lhs_weight - rhs_sign*rhs_weight) q^N."""
    spec = get_case(case_id)
    terms: Dict[int, int] = {}
    for lam in exceptional_partitions(spec.case_id, order):
        weight = spec.lhs_weight(lam) - spec.rhs_sign * spec.rhs_weight(lam)
        terms[lam.size] = terms.get(lam.size, 0) + weight
    return spec.prefactor(order).mul(TruncatedSeries.from_terms(terms, order))


def partial_product_check(case_id, order: int) -> List[CheckResult]:
    """
    prod_{j<=n} b_j against the family restricted by largest part, for every n.

    The bound is 2n for case iii and 2n+1 for case vi, where the
    prefactor (1-q) is carried on the combinatorial side.
    """
    spec = get_case(case_id)
    offsets = {CaseId.III: 0, CaseId.VI: 1}
    if spec.case_id not in offsets:
        return []

    last = order // 2 + 1
    weights = {
        str(n): (lambda lam, cap=2 * n + offsets[spec.case_id]:
                 spec.sign(lam) * (lam.largest <= cap))
        for n in range(last + 1)
    }
    restricted = profile_gfs(spec.family, weights, order)
    prefactor = spec.prefactor(order)

    results = []
    product = one(order)
    for n in range(last + 1):
        if n:
            product = product.mul(spec.factor(n, order))
        expected = prefactor.mul(restricted[str(n)])
        results.append(check_equal(f"partial-product-{n}", product, expected))
    return results


def summand_interpretation(case_id, d: int, order: int) -> CheckResult:
    """c_d * prod_j b_j against rhs_sign * prefactor * sum n_λ(d) sign(λ) q^N."""
    spec = get_case(case_id)
    product = product_converging(spec.factor, spec.factor_valuation, order)
    left = spec.summand(d, order).mul(product)
    counted = weighted_gf(spec.family, lambda lam: lam.n_at(d) * spec.sign(lam), order)
    right = spec.prefactor(order).mul(counted).scale(spec.rhs_sign)
    return check_equal(f"summand-{d}", left, right)


def shifted_arrangement(order: int, lemma: TruncatedSeries) -> List[CheckResult]:
    """
    The case vi identity with the (1-q) prefactor cleared.

    lemma - (1-q) T sum c_d = (1-q) sum r q^(r(r+1)/2), with T the product of
    (1-q^2j)/(1-q^(2j-1)), and prod b_j = (1-q) T.
    """
    spec = get_case(CaseId.VI)
    t = triangular_product(order)
    factor_product = product_converging(spec.factor, spec.factor_valuation, order)
    summands = sum_converging(spec.summand, spec.summand_valuation, order)
    cleared = lemma.sub(one_minus_q(order).mul(t).mul(summands))
    return [
        check_equal("shifted-product", factor_product, one_minus_q(order).mul(t)),
        check_equal("cleared-arrangement", cleared,
                    one_minus_q(order).mul(triangular_weight_series(order))),
    ]


def _case_checks(spec: CaseSpec, order: int, lemma: TruncatedSeries) -> List[CheckResult]:
    checks: List[CheckResult] = []
    case_id = spec.case_id
    if case_id in _CASE_PRODUCT:
        checks.append(product_identity(_CASE_PRODUCT[case_id], order))
    if case_id is CaseId.VI:
        checks.extend(shifted_arrangement(order, lemma))

    if case_id in _EXCEPTIONAL_KINDS:
        count = len(exceptional_partitions(case_id, order))
        checks.append(check_equal("exceptional-sum", exceptional_sum(case_id, order),
                                  g_series(case_id, order), f"{count} exceptional partitions"))

    partials = partial_product_check(case_id, order)
    if partials:
        failed = [c for c in partials if not c.equal]
        first = failed[0] if failed else None
        checks.append(CheckResult(
            "partial-products",
            not failed,
            first.first_mismatch if first else None,
            f"{len(partials)} prefixes" + (f", first failure {first.name}" if first else ""),
        ))
    return checks


def verify(case_id, order: int, include_subset: bool = True) -> VerificationReport:
    """
    Verify one identity row by every route.

    Args:
        case_id: One of i..vi
        order: Truncation order
        include_subset: Also evaluate the subset-expansion route

    Returns:
        VerificationReport; ``equal`` is True iff all routes agree
    """
    spec = get_case(case_id)
    name = spec.case_id.value
    started = time.perf_counter()
    logger.info(f"verifying case {name} to q^{order}")

    routes: Dict[str, TruncatedSeries] = {}
    routes["tail"] = _timed(name, "tail", order, lambda: lhs_tail_sum(spec, order))
    routes["lemma"] = _timed(name, "lemma", order, lambda: lhs_lemma_form(spec, order))
    if include_subset:
        routes["subset"] = _timed(name, "subset", order, lambda: lhs_subset_form(spec, order))
    comb = _timed(name, "enumeration", order, lambda: combinatorial_sides(spec, order))
    prefactor = spec.prefactor(order)
    routes["comb-lhs"] = prefactor.mul(comb["lhs"])

    correction = spec.correction(order)
    products = _timed(name, "series-rhs", order, lambda: product_side(spec, order))
    routes["series-rhs"] = products.add(correction)
    routes["comb-rhs"] = prefactor.mul(comb["rhs"]).scale(spec.rhs_sign).add(correction)

    mismatch = compare_routes(routes)
    if mismatch is not None:
        reference = next(iter(routes))
        expected = mismatch.values[reference]
        other = next(r for r, v in mismatch.values.items() if v != expected)
        events.log_mismatch(name, reference, other, mismatch.exponent,
                            expected, mismatch.values[other])

    empirical = routes["tail"].sub(products)
    variants = {variant: empirical.first_mismatch(series) is None
                for variant, series in g_variants(spec.case_id, order)}
    matched = next((variant for variant, ok in variants.items() if ok), None)
    if matched is None:
        logger.warning(f"case {name}: no printed correction matches the computed one")

    checks = _case_checks(spec, order, routes["lemma"])
    report = VerificationReport(
        case_id=name,
        order=order,
        routes=list(routes),
        equal=mismatch is None,
        first_mismatch=mismatch,
        g_variant=matched,
        g_variants=variants,
        checks=checks,
        elapsed_seconds=time.perf_counter() - started,
    )
    logger.info(f"case {name}: {'PASS' if report.passed else 'FAIL'} in {report.elapsed_seconds:.2f}s")
    return report


def _verify_worker(args) -> VerificationReport:
    case_id, order, include_subset = args
    return verify(case_id, order, include_subset)


@log_function_calls
def verify_all(order: int, workers: int = 1, include_subset: bool = True,
               cases: Optional[Sequence[CaseId]] = None) -> List[VerificationReport]:
    """Verify every row; with workers > 1 rows run in a process pool. Output order is fixed."""
    cases = list(cases or CaseId)
    jobs = [(c.value, order, include_subset) for c in cases]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_verify_worker, jobs))
    return [_verify_worker(job) for job in jobs]
