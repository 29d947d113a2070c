"""
Performance Monitoring

Wall-clock and memory measurement for verification routes and sweeps.
Measurements are collected per label; each command logs the summary when it
finishes.
"""

import logging
import threading
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass
from typing import Any, Dict, Iterator, List, Optional

import psutil


@dataclass
class RunMetrics:
    """One timed section."""
    label: str
    seconds: float
    rss_start_mb: float
    rss_end_mb: float

    @property
    def rss_delta_mb(self) -> float:
        return self.rss_end_mb - self.rss_start_mb


class PerformanceMonitor:
    """Collects timings and resident memory for labelled sections."""

    def __init__(self, slow_threshold: Optional[float] = None):
        """
        Initialize performance monitor.

        Args:
            slow_threshold: Sections taking longer than this many seconds are
                logged at WARNING instead of DEBUG
        """
        self.logger = logging.getLogger(__name__)
        self.slow_threshold = slow_threshold
        self._process = psutil.Process()
        self._records: List[RunMetrics] = []
        self._lock = threading.Lock()

    def _rss_mb(self) -> float:
        return self._process.memory_info().rss / (1024 * 1024)

    @contextmanager
    def measure(self, label: str) -> Iterator[None]:
        """Time the enclosed block and record it under ``label``."""
        rss_start = self._rss_mb()
        start = time.perf_counter()
        try:
            yield
        finally:
            record = RunMetrics(label, time.perf_counter() - start, rss_start, self._rss_mb())
            with self._lock:
                self._records.append(record)
            if self.slow_threshold is not None and record.seconds > self.slow_threshold:
                self.logger.warning(f"{label} took {record.seconds:.2f}s")
            else:
                self.logger.debug(f"{label} took {record.seconds:.4f}s "
                                  f"(rss {record.rss_end_mb:.1f} MB)")

    def records(self) -> List[RunMetrics]:
        with self._lock:
            return list(self._records)

    def get_performance_summary(self) -> Dict[str, Any]:
        """Total time, peak memory and per-label timings."""
        records = self.records()
        return {
            'total_seconds': sum(r.seconds for r in records),
            'peak_rss_mb': max((r.rss_end_mb for r in records), default=self._rss_mb()),
            'sections': [dict(asdict(r), rss_delta_mb=r.rss_delta_mb) for r in records],
        }

    def reset(self):
        with self._lock:
            self._records.clear()


# Global performance monitor
_performance_monitor: Optional[PerformanceMonitor] = None


def get_performance_monitor() -> PerformanceMonitor:
    """Get global performance monitor instance."""
    global _performance_monitor
    if _performance_monitor is None:
        _performance_monitor = PerformanceMonitor()
    return _performance_monitor
