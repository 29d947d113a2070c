"""
Truncated Power Series

Exact arithmetic on integer power series modulo q^(order+1), plus the
q-adically convergent infinite products and sums every identity is built from.

Coefficients are kept as Python ints but are required to fit a signed 64-bit
word. Products go through numpy when a bound check proves the int64
convolution cannot overflow; otherwise an exact convolution runs and the
result is range-checked. Nothing is ever silently wrapped.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, Iterable, Mapping, Optional, Sequence, Tuple

import numpy as np

from utils.error_handler import (
    NonUnitError,
    OrderMismatchError,
    SeriesError,
    SeriesOverflowError,
    ValuationContractError,
)

logger = logging.getLogger(__name__)

INT64_MIN = int(np.iinfo(np.int64).min)
INT64_MAX = int(np.iinfo(np.int64).max)

# Guard against valuation functions that never pass the truncation order.
ITERATIONS_PER_ORDER = 64

FactorFn = Callable[[int, int], "TruncatedSeries"]
ValuationFn = Callable[[int], int]


def _check_range(coeffs: Sequence[int]) -> None:
    for k, c in enumerate(coeffs):
        if c > INT64_MAX or c < INT64_MIN:
            raise SeriesOverflowError(
                f"coefficient of q^{k} does not fit in 64 bits", exponent=k, value=c
            )


@dataclass(frozen=True)
class TruncatedSeries:
    """
    An integer power series known modulo q^(order+1).

    Attributes:
        order: Highest retained exponent
        coeffs: Exactly order+1 coefficients, coeffs[k] multiplying q^k
    """

    order: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if isinstance(self.order, bool) or not isinstance(self.order, (int, np.integer)):
            raise SeriesError(f"order must be an integer, got {self.order!r}")
        if self.order < 0:
            raise SeriesError(f"order must be non-negative, got {self.order}")
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise SeriesError(
                f"expected {self.order + 1} coefficients for order {self.order}, got {len(coeffs)}"
            )
        _check_range(coeffs)
        object.__setattr__(self, "order", int(self.order))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def _trusted(cls, order: int, coeffs: Tuple[int, ...]) -> "TruncatedSeries":
        """Build without validation; callers guarantee length and range."""
        series = object.__new__(cls)
        object.__setattr__(series, "order", order)
        object.__setattr__(series, "coeffs", coeffs)
        return series

    @classmethod
    def _checked(cls, order: int, coeffs: Iterable[int]) -> "TruncatedSeries":
        coeffs = tuple(coeffs)
        _check_range(coeffs)
        return cls._trusted(order, coeffs)

    @cached_property
    def _array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    @cached_property
    def _max_abs(self) -> int:
        return max(abs(c) for c in self.coeffs)

    # Construction

    @classmethod
    def from_terms(cls, terms: Mapping[int, int], order: int) -> "TruncatedSeries":
        """Series from an {exponent: coefficient} mapping; exponents above order are dropped."""
        coeffs = [0] * (order + 1)
        for k, c in terms.items():
            if k < 0:
                raise SeriesError(f"negative exponent {k}")
            if k <= order:
                coeffs[k] += int(c)
        return cls(order, tuple(coeffs))

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> "TruncatedSeries":
        """Inverse of to_dict."""
        try:
            return cls(int(data["order"]), tuple(data["coeffs"]))
        except (KeyError, TypeError) as e:
            raise SeriesError(f"malformed series data: {e}") from e

    def to_dict(self) -> Dict[str, object]:
        return {"order": self.order, "coeffs": list(self.coeffs)}

    # Inspection

    def coeff(self, k: int) -> int:
        """Coefficient of q^k; k outside 0..order raises SeriesError."""
        if not 0 <= k <= self.order:
            raise SeriesError(f"exponent {k} outside 0..{self.order}")
        return self.coeffs[k]

    def valuation(self) -> Optional[int]:
        """Least exponent with a nonzero coefficient, None for the zero series."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def first_mismatch(self, other: "TruncatedSeries") -> Optional[int]:
        """Least exponent where the two series differ, None when equal."""
        self._require_same_order(other)
        for k, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return k
        return None

    def truncate(self, order: int) -> "TruncatedSeries":
        """Explicitly lower the truncation order."""
        if not 0 <= order <= self.order:
            raise OrderMismatchError(f"cannot truncate order {self.order} series to {order}")
        return TruncatedSeries._trusted(order, self.coeffs[:order + 1])

    # Ring operations

    def _require_same_order(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise SeriesError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatchError(
                f"series orders differ: {self.order} and {other.order}"
            )

    def add(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_order(other)
        return TruncatedSeries._checked(
            self.order, (a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def sub(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_order(other)
        return TruncatedSeries._checked(
            self.order, (a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def scale(self, c: int) -> "TruncatedSeries":
        c = int(c)
        return TruncatedSeries._checked(self.order, (c * a for a in self.coeffs))

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product truncated at the common order."""
        self._require_same_order(other)
        n = self.order + 1
        if self._max_abs * other._max_abs * n <= INT64_MAX:
            product = np.convolve(self._array, other._array)[:n]
            return TruncatedSeries._trusted(self.order, tuple(product.tolist()))

        logger.debug(f"int64 bound exceeded at order {self.order}, using exact convolution")
        a, b = self.coeffs, other.coeffs
        nonzero_a = [(i, c) for i, c in enumerate(a) if c]
        out = [0] * n
        for j, bj in enumerate(b):
            if not bj:
                continue
            for i, ai in nonzero_a:
                if i + j >= n:
                    break
                out[i + j] += ai * bj
        return TruncatedSeries._checked(self.order, out)

    def invert_unit(self) -> "TruncatedSeries":
        """Multiplicative inverse of a series with constant term +1 or -1."""
        a = self.coeffs
        a0 = a[0]
        if a0 not in (1, -1):
            raise NonUnitError(f"constant term {a0} is not a unit")
        b = [a0]
        # a0 is its own inverse, so b_k = -a0 * sum(a_i b_{k-i})
        for k in range(1, self.order + 1):
            total = 0
            for i in range(1, k + 1):
                if a[i]:
                    total += a[i] * b[k - i]
            b.append(-a0 * total)
        return TruncatedSeries._checked(self.order, b)

    def __add__(self, other):
        if isinstance(other, int):
            other = monomial(other, 0, self.order)
        return self.add(other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = monomial(other, 0, self.order)
        return self.sub(other)

    def __rsub__(self, other):
        if isinstance(other, int):
            return monomial(other, 0, self.order).sub(self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return self.scale(other)
        return self.mul(other)

    __rmul__ = __mul__

    def __neg__(self):
        return self.scale(-1)

    def __getitem__(self, k: int) -> int:
        return self.coeff(k)

    def __len__(self) -> int:
        return self.order + 1

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            magnitude = abs(c)
            if k == 0:
                body = str(magnitude)
            else:
                power = "q" if k == 1 else f"q^{k}"
                body = power if magnitude == 1 else f"{magnitude}{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        tail = f"O(q^{self.order + 1})"
        if not terms:
            return tail
        head_sign, head = terms[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return f"{text} + {tail}"


def zero(order: int) -> TruncatedSeries:
    return TruncatedSeries(order, (0,) * (order + 1))


def one(order: int) -> TruncatedSeries:
    return TruncatedSeries(order, (1,) + (0,) * order)


def monomial(c: int, k: int, order: int) -> TruncatedSeries:
    """c*q^k truncated; zero when k exceeds the order."""
    if k < 0:
        raise SeriesError(f"negative exponent {k}")
    coeffs = [0] * (order + 1)
    if k <= order:
        coeffs[k] = int(c)
    return TruncatedSeries(order, tuple(coeffs))


def geometric(d: int, order: int) -> TruncatedSeries:
    """q^d/(1-q^d) = sum over m >= 1 of q^(md)."""
    if d < 1:
        raise SeriesError(f"geometric step must be positive, got {d}")
    coeffs = [0] * (order + 1)
    for k in range(d, order + 1, d):
        coeffs[k] = 1
    return TruncatedSeries._trusted(order, tuple(coeffs))


def binomial_factor(sign: int, k: int, order: int) -> TruncatedSeries:
    """1 + sign*q^k, the building block of every product factor."""
    return one(order).add(monomial(sign, k, order))


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a.add(b)


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a.sub(b)


def scale(c: int, a: TruncatedSeries) -> TruncatedSeries:
    return a.scale(c)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a.mul(b)


def invert_unit(a: TruncatedSeries) -> TruncatedSeries:
    return a.invert_unit()


def coeff(a: TruncatedSeries, k: int) -> int:
    return a.coeff(k)


def first_mismatch(a: TruncatedSeries, b: TruncatedSeries) -> Optional[int]:
    return a.first_mismatch(b)


def indices_within(valuation: ValuationFn, order: int, what: str):
    """Yield indices 1, 2, ... whose valuation is within the order."""
    limit = ITERATIONS_PER_ORDER * (order + 1)
    previous = None
    j = 1
    while True:
        v = valuation(j)
        if v < 1:
            raise ValuationContractError(f"{what} {j} has valuation {v} < 1")
        if previous is not None and v < previous:
            raise ValuationContractError(
                f"{what} valuations decrease at index {j}: {previous} then {v}"
            )
        if v > order:
            return
        if j > limit:
            raise ValuationContractError(
                f"{what} valuations stay within order {order} after {limit} indices"
            )
        yield j, v
        previous = v
        j += 1


def product_converging(factor: FactorFn, valuation: ValuationFn, order: int) -> TruncatedSeries:
    """
    Product of factor(j, order) over j >= 1, exact modulo q^(order+1).

    Factors with valuation(j) > order are congruent to 1 and skipped.

    Args:
        factor: Callable returning the j-th factor at the given order
        valuation: Declared valuation of factor(j) - 1, nondecreasing and unbounded
        order: Truncation order

    Returns:
        The truncated infinite product

    Raises:
        ValuationContractError: A factor differs from 1 below its declared valuation,
            or the valuations are not nondecreasing and unbounded
    """
    result = one(order)
    for j, v in indices_within(valuation, order, "factor"):
        f = factor(j, order)
        if f.coeffs[0] != 1 or any(f.coeffs[1:v]):
            raise ValuationContractError(
                f"factor {j} is not congruent to 1 modulo q^{v}: {f}"
            )
        result = result.mul(f)
    return result


def sum_converging(term: FactorFn, valuation: ValuationFn, order: int) -> TruncatedSeries:
    """Sum of term(d, order) over d >= 1; each term must vanish below q^valuation(d)."""
    coeffs = [0] * (order + 1)
    for d, v in indices_within(valuation, order, "term"):
        t = term(d, order)
        if any(t.coeffs[:v]):
            raise ValuationContractError(f"term {d} is not divisible by q^{v}: {t}")
        for k in range(v, order + 1):
            coeffs[k] += t.coeffs[k]
    return TruncatedSeries._checked(order, coeffs)


def partial_products(factor: FactorFn, valuation: ValuationFn, order: int):
    """
    Running products of the factors, one per index whose valuation is within order.

    Yields (j, product of factor(1..j)) in increasing j.
    """
    result = one(order)
    for j, v in indices_within(valuation, order, "factor"):
        f = factor(j, order)
        if f.coeffs[0] != 1 or any(f.coeffs[1:v]):
            raise ValuationContractError(
                f"factor {j} is not congruent to 1 modulo q^{v}: {f}"
            )
        result = result.mul(f)
        yield j, result
