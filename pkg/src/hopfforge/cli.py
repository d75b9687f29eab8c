"""Typer-based CLI for hopfforge."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Optional

import typer
from loguru import logger
from rich.console import Console

from .catalog import (
    CatalogError,
    Primes,
    available_cases,
    available_yd_rows,
    build_instance,
    describe_case,
    enumerate_yd,
    export_presentation,
    smallest_primes,
)
from .catalog_data import get_yd_row
from .cohomology import (
    BudgetExceeded,
    Coalgebra,
    CoalgebraError,
    cohomology_dims,
    graded_cohomology_dims,
    spec_from,
    taft_algebra,
    truncated_line,
)
from .config import CheckName, ConfigError, EngineConfig, load_config, save_config
from .expressions import ExpressionError
from .field import FieldError, make_field
from .hopf import HopfError, HopfPresentation
from .lemmas import Identity, identity_grid, verify_identity, verify_jacobson
from .presentation import PresentationError, load_presentation
from .reporting import case_table, listing_table, rows_table, sweep_table, write_markdown
from .verification import (
    Strictness,
    VerificationFailure,
    ensure_passed,
    sweep as run_sweep,
    verify_case,
    verify_presentation,
)

app = typer.Typer(help="Verify and catalog pointed Hopf algebras in positive characteristic.")
console = Console()
err_console = Console(stderr=True)

USAGE_ERRORS = (
    ConfigError,
    CatalogError,
    ExpressionError,
    PresentationError,
    FieldError,
    HopfError,
    typer.BadParameter,
)

_CONFIG = typer.Option(None, "--config", help="Path to configuration YAML")
_LOG_LEVEL = typer.Option("WARNING", "--log-level", help="Logging level")
_LOG_FILE = typer.Option(None, "--log-file", help="Also write the log to this file")
_JSON = typer.Option(False, "--json", help="Print a JSON report")
_P = typer.Option(None, "--p", help="Characteristic p")
_Q = typer.Option(None, "--q", help="Second prime q")
_R = typer.Option(None, "--r", help="Third prime r (pqr cases)")
_SET = typer.Option([], "--set", help="Parameter assignment name=value; repeatable")


def _configure_logging(level: str, log_file: Path | None) -> None:
    logger.remove()
    logger.add(err_console.print, level=level)
    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        logger.add(log_file, level=level)


def _error(exc: Exception) -> typer.Exit:
    err_console.print(f"[red]error:[/red] {exc}")
    return typer.Exit(code=2)


def _echo_json(payload: Any) -> None:
    typer.echo(json.dumps(payload, indent=2, ensure_ascii=False))


def _parse_sets(items: List[str]) -> Dict[str, str]:
    params: Dict[str, str] = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise typer.BadParameter(f"expected name=value, got {item!r}", param_hint="--set")
        params[name.strip()] = value.strip()
    return params


def _primes(case: Optional[str], p: Optional[int], q: Optional[int], r: Optional[int]) -> Primes:
    if p is None and q is None and r is None:
        if case is None:
            raise typer.BadParameter("give --p and --q", param_hint="--p")
        return smallest_primes(case)
    if p is None or q is None:
        raise typer.BadParameter("--p and --q go together", param_hint="--p")
    return Primes(p, q, r)


def _strictness(flag: Optional[bool]) -> Strictness:
    if flag is None:
        return Strictness.NORMAL
    return Strictness.STRICT if flag else Strictness.PERMISSIVE


def _builtin(name: str, p: Optional[int], q: Optional[int]) -> HopfPresentation:
    if p is None:
        raise typer.BadParameter("built-in coalgebras need --p", param_hint="--p")
    if name == "line":
        return truncated_line(make_field(p), q)
    if name == "taft":
        if q is None:
            raise typer.BadParameter("the Taft algebra needs --q", param_hint="--q")
        return taft_algebra(make_field(p, [q]), q)
    raise typer.BadParameter(f"unknown built-in {name!r}; choose line or taft", param_hint="--builtin")


@app.command("list")
def list_cases(
    dim: Optional[str] = typer.Option(None, "--dim", help="Dimension class: p2q, pq2, pqr or pq"),
    json_out: bool = _JSON,
    config: Optional[Path] = _CONFIG,
    log_level: str = _LOG_LEVEL,
) -> None:
    """List catalog cases with their dimension formulas and parameter conditions."""

    _configure_logging(log_level.upper(), None)
    try:
        load_config(config)
        entries = [describe_case(case) for case in available_cases(dim)]
    except USAGE_ERRORS as exc:
        raise _error(exc)
    if json_out:
        _echo_json(entries)
    else:
        console.print(listing_table(entries))


@app.command()
def verify(
    case: Optional[str] = typer.Option(None, "--case", help="Catalog case id, e.g. A1"),
    file: Optional[Path] = typer.Option(None, "--file", exists=True, dir_okay=False, help="Presentation JSON file"),
    p: Optional[int] = _P,
    q: Optional[int] = _Q,
    r: Optional[int] = _R,
    sets: List[str] = _SET,
    strict: Optional[bool] = typer.Option(
        None,
        "--strict/--permissive",
        help="--strict also rejects defaulted parameters; --permissive only warns about violated conditions",
    ),
    checks: List[CheckName] = typer.Option([], "--check", help="Checks to run; repeatable"),
    expected: Optional[int] = typer.Option(None, "--expected", help="Expected dimension for --file"),
    timings: bool = typer.Option(False, "--timings", help="Report wall time"),
    json_out: bool = _JSON,
    config: Optional[Path] = _CONFIG,
    log_level: str = _LOG_LEVEL,
    log_file: Optional[Path] = _LOG_FILE,
) -> None:
    """Instantiate a case (or load a presentation) and run the selected checks."""

    _configure_logging(log_level.upper(), log_file)
    try:
        settings = load_config(config)
        if timings:
            settings.sweep.include_timings = True
        selected = list(checks) or None
        if file is not None:
            report = verify_presentation(load_presentation(file), settings, selected, expected=expected)
        elif case is not None:
            report = verify_case(
                case,
                _primes(case, p, q, r),
                _parse_sets(sets),
                settings,
                selected,
                strictness=_strictness(strict),
            )
        else:
            raise typer.BadParameter("give --case or --file", param_hint="--case")
    except USAGE_ERRORS as exc:
        raise _error(exc)

    if json_out:
        _echo_json(report.to_dict())
    else:
        console.print(case_table(report))
        for message in report.warnings:
            console.print(f"[yellow]WARNING:[/yellow] {message.text}")
    try:
        ensure_passed(report)
    except VerificationFailure as failure:
        if not json_out:
            for result in failure.report.checks:
                for message in result.errors:
                    console.print(f"[red]ERROR:[/red] {result.name}: {message.text}")
        raise typer.Exit(code=1)


@app.command()
def cohomology(
    case: Optional[str] = typer.Option(None, "--case", help="Catalog case id"),
    file: Optional[Path] = typer.Option(None, "--file", exists=True, dir_okay=False, help="Presentation JSON file"),
    builtin: Optional[str] = typer.Option(None, "--builtin", help="line (K[x]/(x^q), q defaults to p) or taft"),
    p: Optional[int] = _P,
    q: Optional[int] = _Q,
    r: Optional[int] = _R,
    sets: List[str] = _SET,
    g: str = typer.Option("1", "--g", help="Group-like giving the right coaction"),
    h: str = typer.Option("1", "--h", help="Group-like giving the left coaction"),
    n: int = typer.Option(2, "--n", min=0, help="Cohomological degree"),
    graded: bool = typer.Option(False, "--graded", help="Split by Adams degree"),
    json_out: bool = _JSON,
    config: Optional[Path] = _CONFIG,
    log_level: str = _LOG_LEVEL,
) -> None:
    """Dimensions of Z^n, B^n and H^n with coefficients ^gK^h."""

    _configure_logging(log_level.upper(), None)
    try:
        settings = load_config(config)
        if file is not None:
            H = load_presentation(file)
        elif builtin is not None:
            H = _builtin(builtin, p, q)
        elif case is not None:
            H = build_instance(case, _primes(case, p, q, r), _parse_sets(sets), strict=False).presentation
        else:
            raise typer.BadParameter("give --case, --file or --builtin", param_hint="--case")
        coalgebra = Coalgebra.from_presentation(H)
        spec = spec_from(H, g, h)
        compute = graded_cohomology_dims if graded else cohomology_dims
        report = compute(coalgebra, spec, n, settings.limits.mem_budget)
    except (BudgetExceeded, CoalgebraError, *USAGE_ERRORS) as exc:
        raise _error(exc)

    payload = {"source": H.name, "dimension": coalgebra.dimension, **report.to_dict()}
    if json_out:
        _echo_json(payload)
        return
    rows = [("dim Z", report.dim_z), ("dim B", report.dim_b), ("dim H", report.dim_h)]
    rows += [(f"Adams {degree}", dim) for degree, dim in sorted((report.adams or {}).items())]
    console.print(rows_table(f"H^{n}(^{report.g}K^{report.h}) of {H.name}", ("", "value"), rows))


@app.command()
def sweep(
    dim: Optional[str] = typer.Option(None, "--dim", help="Dimension class: p2q, pq2, pqr or pq"),
    cases: List[str] = typer.Option([], "--case", help="Only these case ids; repeatable"),
    p: Optional[int] = _P,
    q: Optional[int] = _Q,
    r: Optional[int] = _R,
    workers: Optional[int] = typer.Option(None, "--workers", min=1, help="Worker processes"),
    timings: bool = typer.Option(False, "--timings", help="Report wall time per point"),
    markdown: Optional[Path] = typer.Option(None, "--markdown", help="Write a Markdown summary"),
    json_out: bool = _JSON,
    config: Optional[Path] = _CONFIG,
    log_level: str = _LOG_LEVEL,
    log_file: Optional[Path] = _LOG_FILE,
) -> None:
    """Verify every admissible {0,1} parameter point of the selected cases."""

    _configure_logging(log_level.upper(), log_file)
    try:
        settings = load_config(config)
        if workers is not None:
            settings.sweep.workers = workers
        if timings:
            settings.sweep.include_timings = True
        primes = None if p is None and q is None and r is None else _primes(None, p, q, r)
        report = run_sweep(dim, primes, settings, cases=cases or None)
    except USAGE_ERRORS as exc:
        raise _error(exc)

    if markdown is not None:
        write_markdown(report, markdown)
    if json_out:
        _echo_json(report.to_dict())
    else:
        console.print(sweep_table(report))
        summary = report.to_dict()
        console.print(f"{summary['passed']} of {summary['total']} points passed")
    if not report.passed:
        raise typer.Exit(code=1)


@app.command()
def export(
    case: str = typer.Option(..., "--case", help="Catalog case id"),
    p: Optional[int] = _P,
    q: Optional[int] = _Q,
    r: Optional[int] = _R,
    sets: List[str] = _SET,
    permissive: bool = typer.Option(False, "--permissive", help="Export even when conditions are violated"),
    out: Optional[Path] = typer.Option(None, "--out", help="Write the presentation file here"),
    log_level: str = _LOG_LEVEL,
) -> None:
    """Write an instantiated case as a presentation file."""

    _configure_logging(log_level.upper(), None)
    try:
        payload = export_presentation(case, _primes(case, p, q, r), _parse_sets(sets), strict=not permissive)
    except USAGE_ERRORS as exc:
        raise _error(exc)
    if out is None:
        _echo_json(payload)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    console.print(f"[green]Wrote {case} to {out}[/green]")


@app.command()
def lemmas(
    primes: List[int] = typer.Option([2, 3], "--p", help="Characteristics to check; repeatable"),
    identity: Optional[Identity] = typer.Option(None, "--identity", help="Only this identity"),
    json_out: bool = _JSON,
    log_level: str = _LOG_LEVEL,
) -> None:
    """Check the adjoint-power identities and the Jacobson expansion."""

    _configure_logging(log_level.upper(), None)
    results: List[Dict[str, Any]] = []
    try:
        for p in primes:
            if identity is None:
                results.append(verify_jacobson(p).to_dict())
            for chosen in [identity] if identity is not None else list(Identity):
                for point in identity_grid(chosen, p):
                    results.append(verify_identity(chosen, p, point).to_dict())
    except USAGE_ERRORS as exc:
        raise _error(exc)
    if json_out:
        _echo_json(results)
    else:
        rows = [
            (item["name"], item["p"], json.dumps(item.get("params", {})), "pass" if item["passed"] else "FAIL")
            for item in results
        ]
        console.print(rows_table("Identities", ("Identity", "p", "Parameters", "Result"), rows))
    if not all(item["passed"] for item in results):
        raise typer.Exit(code=1)


@app.command()
def yd(
    row: Optional[str] = typer.Option(None, "--row", help="Realization row, e.g. A or AB1; all rows by default"),
    p: Optional[int] = _P,
    q: Optional[int] = _Q,
    r: Optional[int] = _R,
    json_out: bool = _JSON,
    log_level: str = _LOG_LEVEL,
) -> None:
    """Enumerate Yetter-Drinfeld realizations and compare with the expected counts."""

    _configure_logging(log_level.upper(), None)
    payload: List[Dict[str, Any]] = []
    skipped: List[str] = []
    try:
        for name in [row] if row is not None else available_yd_rows():
            data = get_yd_row(name)
            first_case = data["cases"][0] if data else None
            try:
                enumeration = enumerate_yd(name, _primes(first_case, p, q, r))
            except CatalogError as exc:
                if row is not None:
                    raise
                skipped.append(f"{name}: {exc}")
                continue
            payload.append(enumeration.to_dict())
    except USAGE_ERRORS as exc:
        raise _error(exc)
    for message in skipped:
        err_console.print(f"[yellow]skipped[/yellow] {message}")
    if json_out:
        _echo_json(payload)
    else:
        rows = [
            (item["row"], json.dumps(item["primes"]), item["count"], item["expected"], "ok" if item["count"] == item["expected"] else "MISMATCH")
            for item in payload
        ]
        console.print(rows_table("Yetter-Drinfeld realizations", ("Row", "Primes", "Found", "Expected", ""), rows))
    if any(item["count"] != item["expected"] for item in payload):
        raise typer.Exit(code=1)


@app.command("init-config")
def init_config(path: Path = typer.Argument(..., writable=True, resolve_path=True)) -> None:
    """Write the default configuration to PATH."""

    save_config(EngineConfig(), path)
    console.print(f"[green]Wrote default configuration to {path}[/green]")


if __name__ == "__main__":
    app()
