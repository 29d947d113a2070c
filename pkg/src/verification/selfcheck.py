"""
Randomized Self-Check

Seeded checks of the series arithmetic run before identity verification:
ring axioms on random series, inverses of random units, and the geometric
expansion of 1/(1-q^k).
"""

import logging
from typing import Any, Dict, List

import numpy as np

from core.series import TruncatedSeries, binomial_factor, geometric, monomial, one, zero

logger = logging.getLogger(__name__)

DEFAULT_TRIALS = 25
COEFF_BOUND = 50
# Inverses of units bounded by 2 grow no faster than 3^k.
UNIT_BOUND = 2


def random_series(rng: np.random.Generator, order: int, unit: bool = False) -> TruncatedSeries:
    """Series with uniformly drawn coefficients; units get a constant term of +-1."""
    bound = UNIT_BOUND if unit else COEFF_BOUND
    coeffs = [int(c) for c in rng.integers(-bound, bound + 1, size=order + 1)]
    if unit:
        coeffs[0] = int(rng.choice([-1, 1]))
    return TruncatedSeries(order, tuple(coeffs))


def _trial(rng: np.random.Generator, order: int) -> List[str]:
    a = random_series(rng, order)
    b = random_series(rng, order)
    c = random_series(rng, order)
    failures = []
    if a.add(b) != b.add(a):
        failures.append("addition is not commutative")
    if a.mul(b) != b.mul(a):
        failures.append("multiplication is not commutative")
    if a.mul(b).mul(c) != a.mul(b.mul(c)):
        failures.append("multiplication is not associative")
    if a.mul(b.add(c)) != a.mul(b).add(a.mul(c)):
        failures.append("distributivity fails")
    if a.mul(one(order)) != a or a.add(zero(order)) != a:
        failures.append("identities fail")
    if a.sub(a) != zero(order):
        failures.append("a - a is not zero")

    u = random_series(rng, order, unit=True)
    if u.mul(u.invert_unit()) != one(order):
        failures.append("unit inverse fails")

    k = int(rng.integers(1, order + 1)) if order >= 1 else 1
    expansion = one(order).add(geometric(k, order))
    if binomial_factor(-1, k, order).invert_unit() != expansion:
        failures.append(f"1/(1-q^{k}) is not its geometric expansion")
    if binomial_factor(-1, k, order).mul(geometric(k, order)) != monomial(1, k, order):
        failures.append(f"(1-q^{k}) q^{k}/(1-q^{k}) is not q^{k}")
    return failures


def run_selfcheck(seed: int, trials: int = DEFAULT_TRIALS, order: int = 20) -> Dict[str, Any]:
    """
    Run seeded randomized checks of the series arithmetic.

    Args:
        seed: Seed for numpy's default_rng
        trials: Number of random trials
        order: Truncation order of the random series

    Returns:
        Dictionary with seed, trials, passed and the list of failures
    """
    rng = np.random.default_rng(seed)
    failures: List[str] = []
    for trial in range(trials):
        for message in _trial(rng, order):
            failures.append(f"trial {trial}: {message}")
    passed = not failures
    if passed:
        logger.info(f"selfcheck seed {seed}: {trials} trials passed")
    else:
        logger.error(f"selfcheck seed {seed}: {len(failures)} failures")
    return {"seed": seed, "trials": trials, "passed": passed, "failures": failures}
