"""
Verification Reports

Result records for identity verification, comparison of computation routes
and the text/JSON renderings printed by the command-line frontends.
"""

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence

import pandas as pd

from combinatorics.sweeps import SweepReport
from core.series import TruncatedSeries


@dataclass
class RouteMismatch:
    """Least exponent at which the routes disagree, with every route's value there."""
    exponent: int
    values: Dict[str, int]


@dataclass
class CheckResult:
    """A named auxiliary identity checked alongside the main routes."""
    name: str
    equal: bool
    first_mismatch: Optional[int] = None
    detail: str = ""


@dataclass
class VerificationReport:
    case_id: str
    order: int
    routes: List[str]
    equal: bool
    first_mismatch: Optional[RouteMismatch] = None
    g_variant: Optional[str] = None
    g_variants: Dict[str, bool] = field(default_factory=dict)
    checks: List[CheckResult] = field(default_factory=list)
    doubled: bool = False
    selfcheck: Optional[Dict[str, Any]] = None
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        selfcheck_ok = self.selfcheck is None or self.selfcheck.get("passed", False)
        return self.equal and all(c.equal for c in self.checks) and selfcheck_ok

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "case": self.case_id,
            "order": self.order,
            "routes": list(self.routes),
            "equal": self.equal,
            "passed": self.passed,
        }
        if self.first_mismatch is not None:
            data["first_mismatch"] = asdict(self.first_mismatch)
        if self.g_variants:
            data["g_variant"] = self.g_variant
            data["g_variants"] = dict(self.g_variants)
        if self.checks:
            data["checks"] = [asdict(c) for c in self.checks]
        if self.doubled:
            data["doubled"] = True
        if self.selfcheck is not None:
            data["selfcheck"] = self.selfcheck
        data["elapsed_seconds"] = round(self.elapsed_seconds, 3)
        return data

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def format_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"case {self.case_id} to q^{self.order}: {status}"]
        lines.append(f"  routes: {', '.join(self.routes)} -> {'equal' if self.equal else 'differ'}")
        if self.first_mismatch is not None:
            values = ", ".join(f"{k}={v}" for k, v in self.first_mismatch.values.items())
            lines.append(f"  first mismatch at q^{self.first_mismatch.exponent}: {values}")
        if self.g_variants:
            tried = ", ".join(f"{name}{'*' if ok else ''}" for name, ok in self.g_variants.items())
            lines.append(f"  correction matches: {self.g_variant or 'none'} (tried {tried})")
        for check in self.checks:
            mark = "ok" if check.equal else f"FAIL at q^{check.first_mismatch}"
            detail = f" ({check.detail})" if check.detail else ""
            lines.append(f"  check {check.name}: {mark}{detail}")
        if self.selfcheck is not None:
            mark = "ok" if self.selfcheck.get("passed") else "FAIL"
            lines.append(f"  selfcheck seed {self.selfcheck.get('seed')}: {mark}")
        if self.doubled:
            lines.append("  (coefficients of the doubled identity)")
        return "\n".join(lines)


def compare_routes(routes: Mapping[str, TruncatedSeries]) -> Optional[RouteMismatch]:
    """Least exponent where any route differs from the first, or None when all agree."""
    names = list(routes)
    reference = routes[names[0]]
    exponents = [reference.first_mismatch(routes[name]) for name in names[1:]]
    exponents = [k for k in exponents if k is not None]
    if not exponents:
        return None
    k = min(exponents)
    return RouteMismatch(k, {name: routes[name].coeff(k) for name in names})


def check_equal(name: str, left: TruncatedSeries, right: TruncatedSeries,
                detail: str = "") -> CheckResult:
    k = left.first_mismatch(right)
    return CheckResult(name, k is None, k, detail)


def summary_table(reports: Sequence[VerificationReport]) -> str:
    """One row per report, aligned."""
    frame = pd.DataFrame([
        {
            "case": r.case_id,
            "order": r.order,
            "routes": len(r.routes),
            "equal": r.equal,
            "checks": f"{sum(c.equal for c in r.checks)}/{len(r.checks)}",
            "correction": r.g_variant or "-",
            "seconds": round(r.elapsed_seconds, 2),
            "status": "PASS" if r.passed else "FAIL",
        }
        for r in reports
    ])
    return frame.to_string(index=False)


def format_sweep(report: SweepReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    lines = [
        f"{report.involution} up to N={report.max_n}: {status}",
        f"  partitions checked: {report.checked}",
        f"  violations: {report.violation_count}",
    ]
    for violation in report.violations[:20]:
        lines.append(f"    N={violation.size} {violation.partition}: {violation.message}")

    stats = report.stats
    if "exceptional" in stats:
        lines.append(f"  exceptional: {', '.join(stats['exceptional']) or 'none'}")
    if "fixed_points" in stats:
        lines.append(f"  fixed points: {stats['fixed_points']}")
    if "per_size" in stats:
        lines.append(f"  paths: {stats['paths']}, longest: {stats['longest']}")
        rows = [
            {"N": n, "paths": s["paths"], "longest": s["longest"],
             "lengths": " ".join(f"{k}:{v}" for k, v in s["lengths"].items())}
            for n, s in stats["per_size"].items()
        ]
        if rows:
            table = pd.DataFrame(rows).to_string(index=False)
            lines.extend("  " + line for line in table.splitlines())
    return "\n".join(lines)


def reports_to_json(reports: Iterable[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports])
