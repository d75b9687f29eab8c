"""Run the standard checks on a presentation or a catalog case, singly or as a sweep."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from multiprocessing import Pool
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from loguru import logger

from .catalog import (
    CatalogError,
    ParamValue,
    Primes,
    admissible,
    available_cases,
    build_instance,
    parameter_grid,
    smallest_primes,
)
from .cohomology import BudgetExceeded, CoalgebraError, Coalgebra, cohomology_dims, spec_from
from .config import STANDARD_CHECKS, CheckName, EngineConfig, default_config
from .freealg import NcPoly, format_word
from .hopf import (
    HopfError,
    HopfPresentation,
    antipode_order,
    check_antipode,
    check_bialgebra,
    coradical_filtration,
    derive_antipode,
    group_likes,
    skew_primitives,
)
from .models import CaseReport, CheckResult, warning
from .rewrite import CompletionError, complete


class Strictness(str, Enum):
    """How parameter problems are treated before any check runs.

    ``PERMISSIVE`` turns violated conditions into warnings, ``NORMAL`` rejects
    violated ambiguity and derived conditions, ``STRICT`` also rejects
    defaulted parameters and violated order conditions.
    """

    PERMISSIVE = "permissive"
    NORMAL = "normal"
    STRICT = "strict"


class VerificationFailure(Exception):
    """Raised when a verified case has a failing check."""

    def __init__(self, report: CaseReport) -> None:
        super().__init__(f"Verification of {report.case} failed")
        self.report = report


def selected_checks(checks: Optional[Iterable[Union[CheckName, str]]], config: EngineConfig) -> List[CheckName]:
    chosen = [CheckName(value) for value in (checks if checks is not None else config.checks.default)]
    if CheckName.ALL in chosen:
        return list(STANDARD_CHECKS) + [CheckName.COHOMOLOGY]
    order = list(STANDARD_CHECKS) + [CheckName.COHOMOLOGY]
    return [name for name in order if name in chosen]


# -- individual checks ----------------------------------------------------------------
def _check_confluence(H: HopfPresentation, config: EngineConfig) -> CheckResult:
    result = CheckResult(CheckName.CONFLUENCE.value)
    report = H.confluence()
    result.data.update(report.to_dict(H.gens))
    if report.confluent:
        return result
    first = report.failures[0]
    result.fail(
        f"{first.kind} ambiguity at {format_word(H.gens, first.word)} does not resolve; "
        f"obstruction {first.obstruction}"
    )
    try:
        completion = complete(H.sys, config.limits.max_completion_rules)
    except CompletionError as exc:
        result.warnings.append(warning(f"completion stopped: {exc}"))
        return result
    result.data["completion"] = {
        "added": [rule.format() for rule in completion.added],
        "collapsed": completion.collapsed,
        "dimension": completion.dimension,
    }
    return result


def _check_dimension(H: HopfPresentation, confluence: CheckResult, expected: Optional[int]) -> Tuple[CheckResult, Optional[int]]:
    result = CheckResult(CheckName.DIM.value)
    basis = H.normal_basis
    if basis.infinite:
        cycle = format_word(H.gens, basis.cycle or ())
        result.fail(f"infinitely many irreducible words; powers of {cycle} never reduce")
        result.data.update({"dimension": None, "expected": expected})
        return result, None
    dimension: Optional[int] = basis.count
    if not confluence.passed:
        dimension = confluence.data.get("completion", {}).get("dimension")
    result.data.update({"normal_words": basis.count, "dimension": dimension, "expected": expected})
    if expected is not None and dimension != expected:
        result.fail(f"dimension {dimension} differs from the expected {expected}")
    return result, dimension


def _check_hopf(H: HopfPresentation) -> CheckResult:
    result = check_bialgebra(H)
    result.name = CheckName.HOPF.value
    return result


def _check_antipode(H: HopfPresentation, config: EngineConfig) -> CheckResult:
    try:
        antipode = derive_antipode(H)
    except HopfError as exc:
        result = CheckResult(CheckName.ANTIPODE.value)
        result.fail(str(exc))
        return result
    result = check_antipode(H, antipode)
    result.name = CheckName.ANTIPODE.value
    if not result.passed:
        return result
    H.antipode = antipode
    try:
        result.data["order"] = antipode_order(H, antipode, config.limits.max_antipode_order)
    except HopfError as exc:
        result.warnings.append(warning(str(exc)))
    return result


def skew_degrees(H: HopfPresentation, name: str) -> Optional[Tuple[NcPoly, NcPoly]]:
    """(g, h) with Δ(x) = x⊗g + h⊗x + (tail), read off the coproduct of generator ``name``."""

    index = H.gens.index(name)
    group = set(H.group_letters())
    image = H.delta_word((index,))
    right = [v for (u, v) in image.terms if u == (index,) and all(letter in group for letter in v)]
    left = [u for (u, v) in image.terms if v == (index,) and all(letter in group for letter in u)]
    if len(right) != 1 or len(left) != 1:
        return None
    return H.monomial(right[0]), H.monomial(left[0])


def _check_primitives(H: HopfPresentation) -> CheckResult:
    result = CheckResult(CheckName.PRIMITIVES.value)
    grouplike = group_likes(H)
    result.data["group_likes"] = len(grouplike)
    if H.group_order is not None and len(grouplike) != H.group_order:
        result.fail(f"found {len(grouplike)} group-like elements, expected {H.group_order}")
    if not grouplike.certified:
        result.warnings.append(warning("group-like search did not certify the coradical"))
    spaces: Dict[str, Any] = {}
    for name in H.gens.names:
        if name in H.grouplikes:
            continue
        degrees = skew_degrees(H, name)
        if degrees is None:
            result.fail(f"Δ({name}) has no unique {name}⊗g and h⊗{name} terms")
            continue
        g, h = degrees
        x = H.generator(name)
        space = skew_primitives(H, g, h)
        exact = H.delta(x) == H.reduce(H.tensor(x, g) + H.tensor(h, x))
        member = space.contains(H.reduce(x))
        spaces[name] = {"g": str(g), "h": str(h), "dim": space.dimension, "contains": member}
        if exact and not member:
            result.fail(f"{name} is ({g}, {h})-skew-primitive but missing from the computed space")
        if not exact and member:
            result.fail(f"{name} carries a coproduct tail yet lies in P_({g},{h})")
    result.data["skew_primitives"] = spaces
    filtration = coradical_filtration(H, grouplike.elements)
    result.data["filtration"] = filtration.to_dict()
    return result


def _check_cohomology(H: HopfPresentation, config: EngineConfig) -> CheckResult:
    result = CheckResult(CheckName.COHOMOLOGY.value)
    n = config.checks.cohomology_degree
    coalgebra = Coalgebra.from_presentation(H)
    pairs = [("1", "1")] + [("1", name) for name in list(H.grouplikes)[:1]]
    reports = []
    for g, h in pairs:
        try:
            spec = spec_from(H, g, h)
            reports.append(cohomology_dims(coalgebra, spec, n, config.limits.mem_budget).to_dict())
        except BudgetExceeded as exc:
            result.fail(str(exc))
            break
        except CoalgebraError as exc:
            result.fail(str(exc))
    result.data["cohomology"] = reports
    return result


def _skipped(name: CheckName, reason: str) -> CheckResult:
    result = CheckResult(name.value)
    result.warnings.append(warning(f"skipped: {reason}"))
    return result


# -- drivers --------------------------------------------------------------------------
def verify_presentation(
    H: HopfPresentation,
    config: Optional[EngineConfig] = None,
    checks: Optional[Iterable[Union[CheckName, str]]] = None,
    *,
    expected: Optional[int] = None,
    report: Optional[CaseReport] = None,
) -> CaseReport:
    """Run the selected checks on ``H`` and collect them into a report."""

    config = config or default_config()
    chosen = selected_checks(checks, config)
    started = time.perf_counter()
    if report is None:
        report = CaseReport(H.name, {"p": H.ctx.p}, {}, expected_dimension=expected)
    confluence = _check_confluence(H, config)
    if CheckName.CONFLUENCE in chosen:
        report.add(confluence)
    dim_result, dimension = _check_dimension(H, confluence, expected)
    report.dimension = dimension
    if CheckName.DIM in chosen:
        report.add(dim_result)
    blocked: Optional[str] = None
    if not confluence.passed:
        blocked = "presentation is not confluent"
    elif H.normal_basis.infinite:
        blocked = "presentation is infinite-dimensional"
    for name in chosen:
        if name in (CheckName.CONFLUENCE, CheckName.DIM):
            continue
        if blocked:
            report.add(_skipped(name, blocked))
            continue
        logger.debug("{}: running {} check", H.name, name.value)
        if name is CheckName.HOPF:
            report.add(_check_hopf(H))
        elif name is CheckName.ANTIPODE:
            report.add(_check_antipode(H, config))
        elif name is CheckName.PRIMITIVES:
            report.add(_check_primitives(H))
        elif name is CheckName.COHOMOLOGY:
            report.add(_check_cohomology(H, config))
    if config.sweep.include_timings:
        report.wall_time = time.perf_counter() - started
    return report


def verify_case(
    case_id: str,
    primes: Union[Primes, Sequence[int], Mapping[str, int]],
    params: Optional[Mapping[str, ParamValue]] = None,
    config: Optional[EngineConfig] = None,
    checks: Optional[Iterable[Union[CheckName, str]]] = None,
    *,
    strictness: Strictness = Strictness.NORMAL,
) -> CaseReport:
    """Instantiate a catalog case and verify it.

    Raises :class:`~hopfforge.catalog.ConstraintViolation` for rejected
    parameters and :class:`~hopfforge.catalog.CatalogError` for warnings
    promoted under ``STRICT``.
    """

    instance = build_instance(case_id, Primes.of(primes), params, strict=strictness is not Strictness.PERMISSIVE)
    if strictness is Strictness.STRICT and instance.warnings:
        raise CatalogError(f"{case_id}: " + "; ".join(instance.warnings))
    report = CaseReport(
        case_id,
        instance.primes.as_dict(),
        instance.params,
        expected_dimension=instance.expected_dimension,
    )
    report.warnings.extend(warning(text) for text in instance.warnings)
    return verify_presentation(instance.presentation, config, checks, expected=instance.expected_dimension, report=report)


def ensure_passed(report: CaseReport) -> CaseReport:
    if not report.passed:
        raise VerificationFailure(report)
    return report


# -- sweeps ---------------------------------------------------------------------------
@dataclass(slots=True)
class SweepReport:
    """Per-point case reports of a sweep, in catalog order."""

    dim: Optional[str]
    entries: List[Dict[str, Any]] = field(default_factory=list)
    skipped: List[Dict[str, str]] = field(default_factory=list)

    @property
    def failed(self) -> List[Dict[str, Any]]:
        return [entry for entry in self.entries if not entry.get("passed")]

    @property
    def passed(self) -> bool:
        return not self.failed

    def to_dict(self) -> Dict[str, Any]:
        return {
            "dim": self.dim,
            "total": len(self.entries),
            "passed": len(self.entries) - len(self.failed),
            "failed": len(self.failed),
            "entries": list(self.entries),
            "skipped": list(self.skipped),
        }


Job = Tuple[str, Dict[str, int], Dict[str, int], Dict[str, Any], List[str]]


def _run_job(job: Job) -> Dict[str, Any]:
    case_id, primes, params, config_data, checks = job
    try:
        config = EngineConfig.parse_obj(config_data)
        return verify_case(case_id, primes, params, config, checks).to_dict()
    except Exception as exc:  # failures are recorded, never raised
        logger.exception("sweep point {} {} {} crashed", case_id, primes, params)
        return {
            "case": case_id,
            "primes": dict(primes),
            "params": {name: str(value) for name, value in params.items()},
            "passed": False,
            "error": f"{type(exc).__name__}: {exc}",
        }


def plan_sweep(
    dim: Optional[str] = None,
    primes: Union[Primes, Sequence[int], Mapping[str, int], None] = None,
    cases: Optional[Sequence[str]] = None,
) -> Tuple[List[Tuple[str, Dict[str, int], Dict[str, int]]], List[Dict[str, str]]]:
    """Admissible grid points to verify, plus the cases that were skipped and why."""

    points: List[Tuple[str, Dict[str, int], Dict[str, int]]] = []
    skipped: List[Dict[str, str]] = []
    for case_id in cases if cases is not None else available_cases(dim):
        try:
            chosen = Primes.of(primes) if primes is not None else smallest_primes(case_id)
            if not admissible(case_id, chosen):
                skipped.append({"case": case_id, "reason": f"primes {chosen.label()} are not admissible"})
                continue
            grid = parameter_grid(case_id, chosen)
        except CatalogError as exc:
            skipped.append({"case": case_id, "reason": str(exc)})
            continue
        for point in grid:
            if point.admissible:
                points.append((case_id, chosen.as_dict(), dict(point.params)))
    return points, skipped


def sweep(
    dim: Optional[str] = None,
    primes: Union[Primes, Sequence[int], Mapping[str, int], None] = None,
    config: Optional[EngineConfig] = None,
    *,
    cases: Optional[Sequence[str]] = None,
) -> SweepReport:
    """Verify every admissible {0,1} grid point of the selected cases.

    Without ``primes`` each case runs at its smallest admissible primes.
    """

    config = config or default_config()
    points, skipped = plan_sweep(dim, primes, cases)
    config_data = config.dict()
    checks = [name.value for name in selected_checks(None, config)]
    jobs: List[Job] = [(case_id, p, params, config_data, checks) for case_id, p, params in points]
    logger.info("sweeping {} points with {} worker(s)", len(jobs), config.sweep.workers)
    if config.sweep.workers > 1 and len(jobs) > 1:
        with Pool(config.sweep.workers) as pool:
            handles = [pool.apply_async(_run_job, (job,)) for job in jobs]
            pool.close()
            pool.join()
            entries = [handle.get() for handle in handles]
    else:
        entries = [_run_job(job) for job in jobs]
    return SweepReport(dim, entries, skipped)


__all__ = [
    "Strictness",
    "VerificationFailure",
    "SweepReport",
    "selected_checks",
    "skew_degrees",
    "verify_presentation",
    "verify_case",
    "ensure_passed",
    "plan_sweep",
    "sweep",
]
