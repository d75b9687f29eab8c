from __future__ import annotations

import json
from pathlib import Path

from typer.testing import CliRunner

from hopfforge.cli import app
from hopfforge.config import load_config

runner = CliRunner()


def test_list_json() -> None:
    result = runner.invoke(app, ["list", "--dim", "pq", "--json"])
    assert result.exit_code == 0, result.output
    cases = [entry["case"] for entry in json.loads(result.stdout)]
    assert cases == ["CA1", "CA2", "CA3a", "CA3b"]


def test_verify_passing_case() -> None:
    result = runner.invoke(app, ["verify", "--case", "A1", "--p", "2", "--q", "3", "--set", "lambda=1", "--json"])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert payload["passed"] is True
    assert payload["dimension"] == 12


def test_verify_negative_control_exits_with_failure() -> None:
    args = ["verify", "--case", "A2", "--p", "2", "--q", "3", "--set", "lambda=1"]
    rejected = runner.invoke(app, args)
    assert rejected.exit_code == 2
    permissive = runner.invoke(app, args + ["--permissive", "--check", "confluence", "--json"])
    assert permissive.exit_code == 1
    payload = json.loads(permissive.stdout)
    assert payload["passed"] is False
    assert "does not resolve" in payload["checks"][0]["errors"][0]


def test_verify_rejects_malformed_assignments() -> None:
    result = runner.invoke(app, ["verify", "--case", "A1", "--p", "2", "--q", "3", "--set", "lambda"])
    assert result.exit_code == 2


def test_cohomology_of_builtin_line() -> None:
    result = runner.invoke(app, ["cohomology", "--builtin", "line", "--p", "3", "--n", "2", "--graded", "--json"])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert payload["dimH"] == 1
    assert payload["adams"] == {"3": 1}


def test_export_then_verify_file(tmp_path: Path) -> None:
    out = tmp_path / "a1.json"
    result = runner.invoke(app, ["export", "--case", "A1", "--p", "2", "--q", "3", "--set", "lambda=1", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert json.loads(out.read_text())["name"] == "A1[p=2, q=3]"
    verified = runner.invoke(app, ["verify", "--file", str(out), "--expected", "12", "--json"])
    assert verified.exit_code == 0, verified.output
    assert json.loads(verified.stdout)["dimension"] == 12


def test_lemmas_for_one_identity() -> None:
    result = runner.invoke(app, ["lemmas", "--p", "3", "--identity", "group-adjoint", "--json"])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert [item["name"] for item in payload] == ["group-adjoint"]


def test_yd_row_counts() -> None:
    result = runner.invoke(app, ["yd", "--row", "A", "--p", "2", "--q", "3", "--json"])
    assert result.exit_code == 0, result.output
    payload = json.loads(result.stdout)
    assert payload[0]["count"] == payload[0]["expected"] == 6


def test_init_config(tmp_path: Path) -> None:
    path = tmp_path / "hopfforge.yml"
    result = runner.invoke(app, ["init-config", str(path)])
    assert result.exit_code == 0
    assert load_config(path).sweep.workers == 1
