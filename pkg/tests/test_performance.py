"""
Performance Tests

Coarse timing and memory bounds for the verification routes and sweeps.
"""

import os
import sys
import time
from pathlib import Path

import psutil
import pytest

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from combinatorics.sweeps import run_sweep
from core.partitions import PartitionFamily, count_gf
from utils.performance_monitor import PerformanceMonitor
from verification.identities import verify
from verification.mocktheta import verify_rank


class TestPerformance:
    """Simple performance tests"""

    def test_verify_speed(self):
        start = time.time()
        report = verify("iii", 40)
        elapsed = time.time() - start
        assert report.passed
        assert elapsed < 30.0

    def test_sweep_speed(self):
        start = time.time()
        report = run_sweep("franklin", 30)
        elapsed = time.time() - start
        assert report.passed
        assert elapsed < 30.0

    def test_enumeration_speed(self):
        start = time.time()
        gf = count_gf(PartitionFamily.all(), 40)
        elapsed = time.time() - start
        assert gf.coeff(40) == 37338
        assert elapsed < 30.0

    def test_memory_usage(self):
        process = psutil.Process(os.getpid())
        initial_memory = process.memory_info().rss / 1024 / 1024

        for order in (10, 20, 30):
            verify_rank(order)

        memory_increase = process.memory_info().rss / 1024 / 1024 - initial_memory
        assert memory_increase < 200

    @pytest.mark.slow
    def test_unrestricted_cases_at_sixty(self):
        start = time.time()
        assert all(verify(case, 60).passed for case in ("i", "ii", "iii"))
        assert time.time() - start < 30.0

    @pytest.mark.slow
    def test_full_order_case(self):
        start = time.time()
        assert verify("iv", 60).passed
        assert time.time() - start < 120.0


class TestPerformanceMonitor:
    """Test the measurement helper"""

    def test_records_sections(self):
        monitor = PerformanceMonitor()
        with monitor.measure("first"):
            sum(range(1000))
        with monitor.measure("second"):
            pass
        labels = [r.label for r in monitor.records()]
        assert labels == ["first", "second"]
        summary = monitor.get_performance_summary()
        assert summary["total_seconds"] >= 0
        assert summary["peak_rss_mb"] > 0
        assert len(summary["sections"]) == 2
        assert "rss_delta_mb" in summary["sections"][0]

    def test_records_on_failure(self):
        monitor = PerformanceMonitor()
        with pytest.raises(RuntimeError):
            with monitor.measure("broken"):
                raise RuntimeError("boom")
        assert [r.label for r in monitor.records()] == ["broken"]

    def test_slow_sections_warn(self, caplog):
        monitor = PerformanceMonitor(slow_threshold=0.0)
        with caplog.at_level("WARNING"):
            with monitor.measure("sleepy"):
                time.sleep(0.01)
        assert "sleepy took" in caplog.text

    def test_reset(self):
        monitor = PerformanceMonitor()
        with monitor.measure("x"):
            pass
        monitor.reset()
        assert monitor.records() == []
        assert monitor.get_performance_summary()["total_seconds"] == 0
