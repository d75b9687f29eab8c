"""Shared result models for checks and case reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional


class MessageLevel(str, Enum):
    """Severity for check messages."""

    ERROR = "error"
    WARNING = "warning"
    INFO = "info"


@dataclass(slots=True)
class CheckMessage:
    """A single finding of a check."""

    level: MessageLevel
    text: str

    def to_dict(self) -> Dict[str, str]:
        return {"level": self.level.value, "text": self.text}


def error(text: str) -> CheckMessage:
    return CheckMessage(MessageLevel.ERROR, text)


def warning(text: str) -> CheckMessage:
    return CheckMessage(MessageLevel.WARNING, text)


def info(text: str) -> CheckMessage:
    return CheckMessage(MessageLevel.INFO, text)


@dataclass(slots=True)
class CheckResult:
    """Outcome of one named check."""

    name: str
    errors: List[CheckMessage] = field(default_factory=list)
    warnings: List[CheckMessage] = field(default_factory=list)
    notes: List[CheckMessage] = field(default_factory=list)
    data: Dict[str, Any] = field(default_factory=dict)

    def extend(self, messages: Iterable[CheckMessage]) -> None:
        for msg in messages:
            if msg.level == MessageLevel.ERROR:
                self.errors.append(msg)
            elif msg.level == MessageLevel.WARNING:
                self.warnings.append(msg)
            else:
                self.notes.append(msg)

    def fail(self, text: str) -> None:
        self.errors.append(error(text))

    @property
    def has_errors(self) -> bool:
        return bool(self.errors)

    @property
    def has_warnings(self) -> bool:
        return bool(self.warnings)

    @property
    def passed(self) -> bool:
        return not self.errors

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.errors:
            payload["errors"] = [msg.text for msg in self.errors]
        if self.warnings:
            payload["warnings"] = [msg.text for msg in self.warnings]
        if self.data:
            payload.update(self.data)
        return payload


@dataclass(slots=True)
class CaseReport:
    """Everything ``verify`` learned about one catalog instantiation."""

    case: str
    primes: Dict[str, int]
    params: Dict[str, str]
    expected_dimension: Optional[int] = None
    dimension: Optional[int] = None
    checks: List[CheckResult] = field(default_factory=list)
    warnings: List[CheckMessage] = field(default_factory=list)
    wall_time: Optional[float] = None

    def add(self, result: CheckResult) -> CheckResult:
        self.checks.append(result)
        return result

    def check(self, name: str) -> Optional[CheckResult]:
        for result in self.checks:
            if result.name == name:
                return result
        return None

    @property
    def passed(self) -> bool:
        return all(result.passed for result in self.checks)

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "case": self.case,
            "primes": dict(self.primes),
            "params": dict(self.params),
            "passed": self.passed,
            "expected_dimension": self.expected_dimension,
            "dimension": self.dimension,
            "checks": [result.to_dict() for result in self.checks],
        }
        if self.warnings:
            payload["warnings"] = [msg.text for msg in self.warnings]
        if self.wall_time is not None:
            payload["wall_time"] = round(self.wall_time, 4)
        return payload


__all__ = [
    "MessageLevel",
    "CheckMessage",
    "CheckResult",
    "CaseReport",
    "error",
    "warning",
    "info",
]
