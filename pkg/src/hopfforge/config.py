"""Engine settings: resource limits, sweep options and the default check set."""

from __future__ import annotations

import os
from enum import Enum
from pathlib import Path
from typing import List, Optional

import yaml
from pydantic import BaseModel, Field, ValidationError, validator

MEM_BUDGET_ENV = "HOPFFORGE_MEM_BUDGET"


class CheckName(str, Enum):
    CONFLUENCE = "confluence"
    DIM = "dim"
    HOPF = "hopf"
    ANTIPODE = "antipode"
    PRIMITIVES = "primitives"
    COHOMOLOGY = "cohomology"
    ALL = "all"


STANDARD_CHECKS = [
    CheckName.CONFLUENCE,
    CheckName.DIM,
    CheckName.HOPF,
    CheckName.ANTIPODE,
    CheckName.PRIMITIVES,
]


class LimitsConfig(BaseModel):
    """Caps on the size of the computations."""

    mem_budget: int = Field(200_000, description="Largest number of basis tensors a cohomology matrix may index.")
    max_field_degree: int = 8
    max_completion_rules: int = 64
    max_antipode_order: int = 4096

    @validator("mem_budget", "max_field_degree", "max_completion_rules", "max_antipode_order")
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("limits must be positive")
        return value


class SweepConfig(BaseModel):
    workers: int = 1
    include_timings: bool = False

    @validator("workers")
    def _at_least_one(cls, value: int) -> int:
        if value < 1:
            raise ValueError("workers must be at least 1")
        return value


class ChecksConfig(BaseModel):
    default: List[CheckName] = Field(default_factory=lambda: list(STANDARD_CHECKS))
    cohomology_degree: int = 2

    @validator("default")
    def _expand_all(cls, value: List[CheckName]) -> List[CheckName]:
        if CheckName.ALL in value:
            return list(STANDARD_CHECKS) + [CheckName.COHOMOLOGY]
        return value


class EngineConfig(BaseModel):
    """Top-level configuration."""

    limits: LimitsConfig = Field(default_factory=LimitsConfig)
    sweep: SweepConfig = Field(default_factory=SweepConfig)
    checks: ChecksConfig = Field(default_factory=ChecksConfig)


class ConfigError(Exception):
    """Raised when a configuration file or override is invalid."""


def _apply_environment(config: EngineConfig) -> EngineConfig:
    raw = os.environ.get(MEM_BUDGET_ENV)
    if raw is None or not raw.strip():
        return config
    try:
        budget = int(raw)
    except ValueError as exc:
        raise ConfigError(f"{MEM_BUDGET_ENV} must be a positive integer, got {raw!r}") from exc
    if budget < 1:
        raise ConfigError(f"{MEM_BUDGET_ENV} must be a positive integer, got {raw!r}")
    config.limits.mem_budget = budget
    return config


def default_config() -> EngineConfig:
    return _apply_environment(EngineConfig())


def load_config(path: Optional[Path]) -> EngineConfig:
    """Load configuration from YAML; ``None`` gives the defaults."""

    if path is None:
        return default_config()
    try:
        data = yaml.safe_load(path.read_text())
    except FileNotFoundError as exc:
        raise ConfigError(f"Configuration file not found: {path}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"Failed to parse YAML: {exc}") from exc

    try:
        config = EngineConfig.parse_obj(data or {})
    except ValidationError as exc:
        raise ConfigError(f"Invalid configuration: {exc}") from exc
    return _apply_environment(config)


def save_config(config: EngineConfig, path: Path) -> None:
    """Persist configuration to disk as YAML."""

    rendered = config.dict()
    rendered["checks"]["default"] = [check.value for check in config.checks.default]
    path.write_text(yaml.safe_dump(rendered, sort_keys=False))


__all__ = [
    "MEM_BUDGET_ENV",
    "CheckName",
    "STANDARD_CHECKS",
    "LimitsConfig",
    "SweepConfig",
    "ChecksConfig",
    "EngineConfig",
    "ConfigError",
    "default_config",
    "load_config",
    "save_config",
]
