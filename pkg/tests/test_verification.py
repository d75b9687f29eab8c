from __future__ import annotations

import pytest

from hopfforge.catalog import CatalogError, ConstraintViolation, available_cases
from hopfforge.cohomology import truncated_line
from hopfforge.config import STANDARD_CHECKS, CheckName, EngineConfig
from hopfforge.field import FieldCtx
from hopfforge.reporting import render_markdown
from hopfforge.verification import (
    Strictness,
    VerificationFailure,
    ensure_passed,
    plan_sweep,
    selected_checks,
    sweep,
    verify_case,
    verify_presentation,
)


def test_selected_checks_follow_the_standard_order() -> None:
    config = EngineConfig()
    assert selected_checks(None, config) == STANDARD_CHECKS
    assert selected_checks(["hopf", "confluence"], config) == [CheckName.CONFLUENCE, CheckName.HOPF]
    assert selected_checks(["all"], config)[-1] is CheckName.COHOMOLOGY


def test_catalog_case_passes_every_check() -> None:
    report = verify_case("A1", (2, 3), {"lambda": 1})
    assert report.passed
    assert report.dimension == report.expected_dimension == 12
    assert [check.name for check in report.checks] == ["confluence", "dim", "hopf", "antipode", "primitives"]
    primitives = report.check("primitives")
    assert primitives is not None
    assert primitives.data["group_likes"] == 6
    assert primitives.data["skew_primitives"]["x"]["contains"] is True
    assert ensure_passed(report) is report


def test_negative_control_reports_the_obstruction() -> None:
    report = verify_case("A2", (2, 3), {"lambda": 1}, strictness=Strictness.PERMISSIVE)
    assert not report.passed
    assert report.warnings[0].text.startswith("parameters violate")
    confluence = report.check("confluence")
    assert confluence is not None
    assert confluence.errors[0].text.startswith("overlap ambiguity at g*x^2 does not resolve")
    assert confluence.data["completion"]["dimension"] == 6
    assert report.dimension == 6
    hopf = report.check("hopf")
    assert hopf is not None and hopf.passed
    assert hopf.warnings[0].text.startswith("skipped")
    with pytest.raises(VerificationFailure):
        ensure_passed(report)


def test_strictness_levels() -> None:
    with pytest.raises(ConstraintViolation):
        verify_case("A2", (2, 3), {"lambda": 1})
    with pytest.raises(CatalogError):
        verify_case("A1", (2, 3), strictness=Strictness.STRICT)
    assert verify_case("A1", (2, 3), strictness=Strictness.NORMAL).warnings


def test_cohomology_check_on_a_presentation(gf3: FieldCtx) -> None:
    config = EngineConfig()
    config.sweep.include_timings = True
    report = verify_presentation(truncated_line(gf3), config, ["all"], expected=3)
    assert report.passed
    assert report.wall_time is not None
    cohomology = report.check("cohomology")
    assert cohomology is not None
    assert [item["dimH"] for item in cohomology.data["cohomology"]] == [1]


def test_cohomology_check_fails_over_budget(gf3: FieldCtx) -> None:
    config = EngineConfig()
    config.limits.mem_budget = 5
    report = verify_presentation(truncated_line(gf3), config, ["cohomology"])
    assert not report.passed
    assert "budget is 5" in report.check("cohomology").errors[0].text


def test_plan_sweep_skips_inadmissible_primes() -> None:
    points, skipped = plan_sweep(primes=(2, 3), cases=["CA2", "CA3a"])
    assert points == [("CA2", {"p": 2, "q": 3}, {"lambda": 0})]
    assert skipped == [{"case": "CA3a", "reason": "primes p=2, q=3 are not admissible"}]


def test_sweep_and_markdown_summary() -> None:
    report = sweep(primes=(2, 3), cases=["CA1"])
    summary = report.to_dict()
    assert summary["total"] == 2
    assert report.passed
    text = render_markdown(report)
    assert text.startswith("# Sweep report")
    assert "2 of 2 points passed." in text
    assert "| CA1 | p=2, q=3 | lambda=1 | 6 | 6 | pass |" in text


@pytest.mark.slow
def test_parallel_sweep_of_the_pq_class() -> None:
    config = EngineConfig()
    config.sweep.workers = 2
    report = sweep("pq", config=config)
    assert report.passed, report.failed
    assert {entry["case"] for entry in report.entries} == {"CA1", "CA2", "CA3a", "CA3b"}


@pytest.mark.slow
@pytest.mark.parametrize("dim", ["p2q", "pq2", "pqr", "pq"])
def test_every_case_passes_at_its_smallest_primes(dim: str) -> None:
    report = sweep(dim)
    assert report.passed, report.failed
    assert report.entries
    assert {entry["case"] for entry in report.entries} <= set(available_cases(dim))
