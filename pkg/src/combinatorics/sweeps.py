"""
Involution Sweeps

Exhaustive checks of the pairing maps over every partition up to a size
bound. Each sweep returns a SweepReport listing violations instead of
raising, so one bad partition does not hide the rest.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List

from core.partitions import Partition, PartitionFamily, iter_partitions
from utils.enhanced_logger import VerificationLogger, log_function_calls
from utils.error_handler import InvolutionError, QPartError

from .involutions import (
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
)

logger = logging.getLogger(__name__)
events = VerificationLogger(__name__)

# Violations beyond this many are counted but not stored.
MAX_RECORDED_VIOLATIONS = 100


@dataclass
class Violation:
    size: int
    partition: str
    message: str

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.size, "partition": self.partition, "message": self.message}


@dataclass
class SweepReport:
    """Outcome of one exhaustive sweep."""

    involution: str
    max_n: int
    checked: int = 0
    violation_count: int = 0
    violations: List[Violation] = field(default_factory=list)
    stats: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def record(self, size: int, partition: Partition, message: str) -> None:
        self.violation_count += 1
        if len(self.violations) < MAX_RECORDED_VIOLATIONS:
            self.violations.append(Violation(size, str(partition), message))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "involution": self.involution,
            "maxN": self.max_n,
            "checked": self.checked,
            "passed": self.passed,
            "violation_count": self.violation_count,
            "violations": [v.to_dict() for v in self.violations],
            "stats": self.stats,
        }


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


def _check_exceptional(report: SweepReport, n: int, partition: Partition, kind) -> None:
    if kind.size != n or kind.partition() != partition:
        report.record(n, partition, f"exceptional shape {kind} does not reproduce the partition")


def check_franklin(max_n: int) -> SweepReport:
    """Franklin's map on distinct-part partitions of size 0..max_n."""
    report = SweepReport("franklin", max_n)
    exceptional: List[str] = []
    family = PartitionFamily.distinct()
    for n in range(max_n + 1):
        for lam in iter_partitions(n, family):
            report.checked += 1
            try:
                kind = classify_exceptional(lam, InvolutionCase.IV)
                if kind is not None:
                    _check_exceptional(report, n, lam, kind)
                    exceptional.append(str(kind))
                    continue
                mu = franklin(lam)
                if not family.contains(mu):
                    report.record(n, lam, f"image {mu} has repeated parts")
                if mu.size != n:
                    report.record(n, lam, f"image {mu} changes the size")
                if abs(mu.length - lam.length) != 1:
                    report.record(n, lam, f"image {mu} does not change the length by one")
                if mu.largest + mu.length != lam.largest + lam.length:
                    report.record(n, lam, f"image {mu} changes largest part plus length")
                if franklin(mu) != lam:
                    report.record(n, lam, f"not an involution: {mu} maps to {franklin(mu)}")
            except QPartError as e:
                report.record(n, lam, str(e))
    report.stats = {"exceptional": exceptional}
    events.log_sweep(report.involution, max_n, report.checked, report.violation_count)
    return report


def check_sigma_odd(max_n: int) -> SweepReport:
    """Diagram conjugation on partitions with no repeated odd part."""
    report = SweepReport("sigma-odd", max_n)
    family = PartitionFamily.no_repeated_odd()
    fixed = 0
    for n in range(max_n + 1):
        for lam in iter_partitions(n, family):
            report.checked += 1
            try:
                mu = sigma_odd(lam)
                if mu == lam:
                    fixed += 1
                if not family.contains(mu):
                    report.record(n, lam, f"image {mu} repeats an odd part")
                if mu.size != n:
                    report.record(n, lam, f"image {mu} changes the size")
                if mu.odd_count % 2 != lam.odd_count % 2:
                    report.record(n, lam, f"image {mu} changes the odd-part sign")
                if mu.length != (lam.largest + 1) // 2 or (mu.largest + 1) // 2 != lam.length:
                    report.record(n, lam, f"image {mu} does not exchange rows and columns")
                if sigma_odd(mu) != lam:
                    report.record(n, lam, f"not an involution: {mu} maps to {sigma_odd(mu)}")
            except QPartError as e:
                report.record(n, lam, str(e))
    report.stats = {"fixed_points": fixed}
    events.log_sweep(report.involution, max_n, report.checked, report.violation_count)
    return report


def _neighbours(lam: Partition) -> set:
    found = set()
    if has_right(lam):
        found.add(right_neighbour(lam))
    if has_left(lam):
        found.add(left_neighbour(lam))
    return found


def _check_path(report: SweepReport, n: int, path: List[Partition], degree: Dict) -> None:
    head = path[0]
    if len(path) < 2:
        report.record(n, head, "path has a single vertex")
        return
    invariant = head.largest + head.length
    for i, vertex in enumerate(path):
        if vertex.size != n:
            report.record(n, vertex, "path leaves the size class")
        if vertex.largest + vertex.length != invariant:
            report.record(n, vertex, "largest part plus length varies along the path")
        if i and _sign(vertex.length) == _sign(path[i - 1].length):
            report.record(n, vertex, "sign does not alternate along the path")
        interior = 0 < i < len(path) - 1
        expected_degree = 2 if interior else 1
        if degree.get(vertex) != expected_degree:
            report.record(n, vertex, f"degree {degree.get(vertex)} where {expected_degree} expected")

    d = head.distinct_count
    pattern = [vertex.distinct_count for vertex in path]
    expected = [d] + [d + 1] * (len(path) - 2) + [d]
    if pattern != expected:
        report.record(n, head, f"distinct-part pattern {pattern} is not {expected}")

    signed = sum(_sign(v.length) * 2 ** v.distinct_count for v in path)
    weighted = sum((v.largest + v.length) * _sign(v.length) * 2 ** v.distinct_count for v in path)
    if signed or weighted:
        report.record(n, head, f"path sums do not vanish: {signed}, {weighted}")


def check_paths(max_n: int) -> SweepReport:
    """The neighbour graph on non-exceptional partitions decomposes into paths."""
    report = SweepReport("paths", max_n)
    per_size: Dict[int, Dict[str, Any]] = {}
    for n in range(max_n + 1):
        vertices = []
        for lam in iter_partitions(n):
            report.checked += 1
            try:
                if classify_exceptional(lam, InvolutionCase.V) is None:
                    vertices.append(lam)
            except QPartError as e:
                report.record(n, lam, str(e))
        vertex_set = set(vertices)

        degree: Dict[Partition, int] = {}
        for lam in vertices:
            try:
                found = _neighbours(lam)
                degree[lam] = len(found)
                if len(found) not in (1, 2):
                    report.record(n, lam, f"degree {len(found)}")
                for mu in found:
                    if mu not in vertex_set:
                        report.record(n, lam, f"neighbour {mu} is not a vertex")
                    elif lam not in _neighbours(mu):
                        report.record(n, lam, f"edge to {mu} is not symmetric")
            except QPartError as e:
                report.record(n, lam, str(e))

        covered = set()
        lengths: List[int] = []
        for lam in vertices:
            if lam in covered:
                continue
            try:
                path = neighbour_path(lam)
            except QPartError as e:
                report.record(n, lam, str(e))
                continue
            overlap = covered.intersection(path)
            if overlap:
                report.record(n, lam, f"paths overlap at {sorted(map(str, overlap))}")
            if lam not in path:
                report.record(n, lam, "path does not contain its start")
            covered.update(path)
            lengths.append(len(path))
            _check_path(report, n, path, degree)

        if covered != vertex_set:
            report.record(n, Partition(()), f"{len(vertex_set - covered)} vertices on no path")
        if vertices:
            per_size[n] = {
                "paths": len(lengths),
                "longest": max(lengths, default=0),
                "lengths": dict(sorted(Counter(lengths).items())),
            }
    report.stats = {
        "paths": sum(s["paths"] for s in per_size.values()),
        "longest": max((s["longest"] for s in per_size.values()), default=0),
        "per_size": per_size,
    }
    events.log_sweep(report.involution, max_n, report.checked, report.violation_count)
    return report


def check_sigma_even(max_n: int) -> SweepReport:
    """Final-column involution on partitions with no repeated even part."""
    report = SweepReport("sigma-even", max_n)
    family = PartitionFamily.no_repeated_even()
    exceptional: List[str] = []
    for n in range(max_n + 1):
        for lam in iter_partitions(n, family):
            report.checked += 1
            try:
                kind = classify_exceptional(lam, InvolutionCase.VI)
                if kind is not None:
                    _check_exceptional(report, n, lam, kind)
                    exceptional.append(str(kind))
                    continue
                mu = sigma_even(lam)
                if not family.contains(mu):
                    report.record(n, lam, f"image {mu} repeats an even part")
                if mu.size != n:
                    report.record(n, lam, f"image {mu} changes the size")
                if mu.largest // 2 + mu.length != lam.largest // 2 + lam.length:
                    report.record(n, lam, f"image {mu} changes rows plus columns")
                if abs(mu.length - lam.length) != 1:
                    report.record(n, lam, f"image {mu} does not change the length by one")
                if mu.even_count % 2 == lam.even_count % 2:
                    report.record(n, lam, f"image {mu} keeps the even-part sign")
                if sigma_even(mu) != lam:
                    report.record(n, lam, f"not an involution: {mu} maps to {sigma_even(mu)}")
            except QPartError as e:
                report.record(n, lam, str(e))
    report.stats = {"exceptional": exceptional}
    events.log_sweep(report.involution, max_n, report.checked, report.violation_count)
    return report


SWEEPS: Dict[str, Callable[[int], SweepReport]] = {
    "franklin": check_franklin,
    "sigma-odd": check_sigma_odd,
    "paths": check_paths,
    "sigma-even": check_sigma_even,
}


@log_function_calls
def run_sweep(name: str, max_n: int) -> SweepReport:
    """Run the named sweep over sizes 0..max_n."""
    if name not in SWEEPS:
        raise InvolutionError(f"unknown involution {name!r}; choose from {', '.join(SWEEPS)}")
    if max_n < 0:
        raise InvolutionError(f"max_n must be non-negative, got {max_n}")
    logger.debug(f"running {name} sweep up to N={max_n}")
    return SWEEPS[name](max_n)
