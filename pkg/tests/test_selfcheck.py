"""
Tests for the randomized arithmetic self-check
"""

import sys
from pathlib import Path

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from verification.selfcheck import UNIT_BOUND, random_series, run_selfcheck


class TestSelfCheck:
    """Test seeded self-checks"""

    def test_passes(self, qpart_seed):
        result = run_selfcheck(qpart_seed, trials=5, order=12)
        assert result == {"seed": qpart_seed, "trials": 5, "passed": True, "failures": []}

    def test_reproducible(self):
        assert run_selfcheck(11, trials=3, order=8) == run_selfcheck(11, trials=3, order=8)

    def test_random_units(self, rng):
        for _ in range(10):
            u = random_series(rng, 6, unit=True)
            assert u.coeff(0) in (-1, 1)
            assert all(abs(c) <= UNIT_BOUND for c in u.coeffs)

    def test_order_zero(self):
        assert run_selfcheck(3, trials=2, order=0)["passed"]
