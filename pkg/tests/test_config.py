from __future__ import annotations

from pathlib import Path

import pytest

from hopfforge.config import (
    MEM_BUDGET_ENV,
    STANDARD_CHECKS,
    CheckName,
    ConfigError,
    EngineConfig,
    load_config,
    save_config,
)


def test_defaults(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(MEM_BUDGET_ENV, raising=False)
    config = load_config(None)
    assert config.limits.mem_budget == 200_000
    assert config.sweep.workers == 1
    assert config.checks.default == STANDARD_CHECKS


def test_environment_overrides_memory_budget(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv(MEM_BUDGET_ENV, "5000")
    assert load_config(None).limits.mem_budget == 5000
    monkeypatch.setenv(MEM_BUDGET_ENV, "lots")
    with pytest.raises(ConfigError):
        load_config(None)


def test_round_trip(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.delenv(MEM_BUDGET_ENV, raising=False)
    config = EngineConfig()
    config.sweep.workers = 3
    config.checks.default = [CheckName.CONFLUENCE, CheckName.DIM]
    path = tmp_path / "hopfforge.yml"
    save_config(config, path)
    loaded = load_config(path)
    assert loaded.sweep.workers == 3
    assert loaded.checks.default == [CheckName.CONFLUENCE, CheckName.DIM]


def test_all_expands_to_every_check(tmp_path: Path) -> None:
    path = tmp_path / "all.yml"
    path.write_text("checks:\n  default: [all]\n")
    config = load_config(path)
    assert config.checks.default == STANDARD_CHECKS + [CheckName.COHOMOLOGY]


@pytest.mark.parametrize(
    "text",
    ["sweep:\n  workers: 0\n", "limits: [1, 2\n", "checks:\n  default: [speed]\n"],
)
def test_invalid_configuration(tmp_path: Path, text: str) -> None:
    path = tmp_path / "bad.yml"
    path.write_text(text)
    with pytest.raises(ConfigError):
        load_config(path)


def test_missing_file(tmp_path: Path) -> None:
    with pytest.raises(ConfigError):
        load_config(tmp_path / "absent.yml")
