"""
Pytest configuration and fixtures for the qpart tests

This module provides common fixtures and configuration for all tests.
"""

import json
import os
import sys
import tempfile
from pathlib import Path

import hypothesis
import numpy as np
import pytest

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

SRC_DIR = Path(__file__).parent.parent / "src"
DEFAULT_SEED = 20240101


def pytest_addoption(parser):
    parser.addoption(
        "--qpart-seed",
        action="store",
        type=int,
        default=DEFAULT_SEED,
        help="Seed for randomized tests",
    )


@pytest.fixture
def qpart_seed(request):
    return request.config.getoption("--qpart-seed")


@pytest.fixture
def rng(qpart_seed):
    """Seeded numpy generator for randomized tests"""
    return np.random.default_rng(qpart_seed)


@pytest.fixture
def src_dir():
    return SRC_DIR


@pytest.fixture
def run_cli():
    """Run src/main.py in a subprocess and return the completed process"""
    import subprocess

    def run(*args, env=None):
        environment = dict(os.environ)
        environment.pop("QPART_MAX_ORDER", None)
        environment.pop("QPART_LOG_LEVEL", None)
        if env:
            environment.update(env)
        return subprocess.run(
            [sys.executable, "main.py", *args],
            capture_output=True, text=True, cwd=str(SRC_DIR), env=environment,
        )

    return run


@pytest.fixture
def sample_config():
    """A complete, valid configuration"""
    return {
        "verification": {"order": 20, "workers": 1, "include_subset": True},
        "involutions": {"max_n": 10, "bounds": {}},
        "mocktheta": {"identity_order": 20, "rank_order": 20},
        "limits": {"max_order": 200, "max_n": 60},
        "output": {"format": "text"},
        "random": {"seed": 7, "trials": 3},
        "logging": {"level": "WARNING", "file": None, "colors": False},
    }


@pytest.fixture
def temp_config_dir(sample_config):
    """Temporary configuration directory with defaults and two profiles"""
    with tempfile.TemporaryDirectory() as tmp:
        root = Path(tmp)
        (root / "profiles").mkdir()
        with open(root / "defaults.json", "w") as f:
            json.dump(sample_config, f)
        with open(root / "profiles" / "small.json", "w") as f:
            json.dump({"verification": {"order": 10}}, f)
        with open(root / "profiles" / "deep.yaml", "w") as f:
            f.write("verification:\n  order: 40\ninvolutions:\n  bounds:\n    franklin: 25\n")
        yield root


@pytest.fixture(autouse=True)
def setup_test_environment(monkeypatch):
    """Keep environment overrides from leaking into tests"""
    monkeypatch.delenv("QPART_MAX_ORDER", raising=False)
    monkeypatch.delenv("QPART_LOG_LEVEL", raising=False)
    yield


def pytest_collection_modifyitems(config, items):
    """Modify test collection to add markers and seed property tests"""
    qpart_seed = config.getoption("--qpart-seed")
    for item in items:
        if getattr(getattr(item, "function", None), "is_hypothesis_test", False):
            hypothesis.seed(qpart_seed)(item.function)
        if "test_integration" in item.nodeid:
            item.add_marker(pytest.mark.integration)
        elif "test_performance" in item.nodeid:
            item.add_marker(pytest.mark.performance)
        elif "test_cli" not in item.nodeid:
            item.add_marker(pytest.mark.unit)
