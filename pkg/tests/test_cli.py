"""
Tests for CLI functionality

Subcommands are exercised both as subprocesses of src/main.py (exit codes,
stdout/stderr separation) and in-process through the parser.
"""

import json
import sys
from pathlib import Path

import pytest

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from cli.diagram import parse_parts
from main import build_parser, run
from utils.error_handler import UsageError


class TestCLICommands:
    """Test the subcommands in a subprocess"""

    @pytest.mark.smoke
    def test_help(self, run_cli):
        result = run_cli("--help")
        assert result.returncode == 0
        for command in ("verify", "involution", "diagram", "catalog"):
            assert command in result.stdout

    def test_missing_command(self, run_cli):
        result = run_cli()
        assert result.returncode == 2

    @pytest.mark.smoke
    def test_verify_case_json(self, run_cli):
        result = run_cli("verify", "--case", "iii", "--order", "20", "--format", "json")
        assert result.returncode == 0
        report = json.loads(result.stdout)
        assert report["case"] == "iii"
        assert report["order"] == 20
        assert report["passed"] is True

    def test_verify_text(self, run_cli):
        result = run_cli("verify", "--case", "iv", "--order", "15")
        assert result.returncode == 0
        assert "case iv to q^15: PASS" in result.stdout
        assert "eq6-with-sign" in result.stdout

    def test_verify_with_seed(self, run_cli):
        result = run_cli("verify", "--case", "rank", "--order", "15", "--seed", "7", "--format", "json")
        assert result.returncode == 0
        report = json.loads(result.stdout)
        assert report["case"] == "rank"
        assert report["doubled"] is True
        assert report["selfcheck"]["seed"] == 7
        assert report["selfcheck"]["passed"] is True

    def test_unknown_case(self, run_cli):
        result = run_cli("verify", "--case", "ix", "--order", "10")
        assert result.returncode == 2
        assert result.stdout == ""
        assert "unknown case" in result.stderr

    def test_order_beyond_limit(self, run_cli):
        result = run_cli("verify", "--case", "iii", "--order", "500")
        assert result.returncode == 2
        assert "exceeds the limit" in result.stderr

    def test_environment_limit(self, run_cli):
        result = run_cli("verify", "--case", "iii", env={"QPART_MAX_ORDER": "10"})
        assert result.returncode == 2
        assert "exceeds the limit 10" in result.stderr

    @pytest.mark.parametrize("argv", [
        ("verify", "--case", "iii", "--order", "10"),
        ("diagram", "--parts", "5,2", "--style", "odd"),
        ("catalog", "--n", "8"),
    ])
    def test_lowered_limit_allows_smaller_orders(self, run_cli, argv):
        result = run_cli(*argv, env={"QPART_MAX_ORDER": "40"})
        assert result.returncode == 0
        assert "exceeds limits.max_order 40" in result.stderr

    def test_unknown_profile(self, run_cli):
        result = run_cli("catalog", "--n", "3", "--profile", "nonexistent")
        assert result.returncode == 2
        assert "unknown profile" in result.stderr

    def test_involution_json(self, run_cli):
        result = run_cli("involution", "--name", "franklin", "--max-n", "15", "--format", "json")
        assert result.returncode == 0
        report = json.loads(result.stdout)
        assert report["involution"] == "franklin"
        assert report["maxN"] == 15
        assert report["violation_count"] == 0

    def test_unknown_involution(self, run_cli):
        result = run_cli("involution", "--name", "zigzag", "--max-n", "5")
        assert result.returncode == 2

    def test_diagram_text(self, run_cli):
        result = run_cli("diagram", "--parts", "8,7,5,4,4,3,2,2,2,1", "--style", "odd")
        assert result.returncode == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "2 2 2 2"
        assert lines[1] == "2 2 2 1"
        assert lines[9] == "1"

    def test_diagram_family_violation(self, run_cli):
        result = run_cli("diagram", "--parts", "3,3", "--style", "odd")
        assert result.returncode == 2
        assert result.stdout == ""

    def test_diagram_malformed(self, run_cli):
        result = run_cli("diagram", "--parts", "1,2")
        assert result.returncode == 2

    @pytest.mark.smoke
    def test_catalog_json_lines(self, run_cli):
        result = run_cli("catalog", "--n", "8", "--format", "json")
        assert result.returncode == 0
        lines = [json.loads(line) for line in result.stdout.splitlines()]
        assert len(lines) == 6 + 13 + 1
        assert lines[0] == {"side": "distinct_with_rank_weight", "partition": [8],
                            "multiplicity": 4, "rank": 7}
        assert lines[-1] == {"n": 8, "left_total": 13, "right_total": 13, "equal": True}

    def test_standalone_module_help(self, run_cli, src_dir):
        import subprocess

        result = subprocess.run([sys.executable, "-m", "cli.catalog", "--help"],
                                capture_output=True, text=True, cwd=str(src_dir))
        assert result.returncode == 0
        assert "--n" in result.stdout


class TestInProcess:
    """Test dispatch through the parser without a subprocess"""

    def parse(self, *argv):
        return build_parser().parse_args(list(argv))

    def test_verify_dispatch(self, capsys):
        code = run(self.parse("verify", "--case", "vi", "--order", "12", "--format", "json",
                              "--log-level", "WARNING"))
        assert code == 0
        assert json.loads(capsys.readouterr().out)["case"] == "vi"

    def test_no_subset(self, capsys):
        code = run(self.parse("verify", "--case", "ii", "--order", "10", "--no-subset",
                              "--format", "json", "--log-level", "WARNING"))
        assert code == 0
        assert "subset" not in json.loads(capsys.readouterr().out)["routes"]

    def test_bare_seed_reads_configuration(self, capsys):
        code = run(self.parse("verify", "--case", "rank", "--order", "12", "--seed",
                              "--format", "json", "--log-level", "WARNING"))
        assert code == 0
        assert json.loads(capsys.readouterr().out)["selfcheck"]["seed"] == 20240101

    def test_diagram_conjugate(self, capsys):
        code = run(self.parse("diagram", "--parts", "8,7,5,4,4,3,2,2,2,1", "--conjugate",
                              "--format", "json", "--log-level", "WARNING"))
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["style"] == "odd"
        assert payload["conjugate"]["partition"] == [19, 11, 5, 3]

    def test_conjugate_needs_odd_style(self):
        with pytest.raises(UsageError):
            run(self.parse("diagram", "--parts", "5,3", "--style", "even", "--conjugate",
                           "--log-level", "WARNING"))

    def test_catalog_text(self, capsys):
        code = run(self.parse("catalog", "--n", "6", "--log-level", "WARNING"))
        assert code == 0
        assert "rank catalog for N=6" in capsys.readouterr().out

    def test_catalog_size_limit(self):
        with pytest.raises(UsageError):
            run(self.parse("catalog", "--n", "500", "--log-level", "WARNING"))

    def test_sweep_uses_profile_bound(self, capsys):
        code = run(self.parse("involution", "--name", "sigma-odd", "--profile", "quick",
                              "--format", "json", "--log-level", "WARNING"))
        assert code == 0
        assert json.loads(capsys.readouterr().out)["maxN"] == 20

    def test_parse_parts(self):
        assert parse_parts("5,3,1").parts == (5, 3, 1)
        with pytest.raises(UsageError):
            parse_parts("1,5")
