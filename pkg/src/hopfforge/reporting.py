"""Human-readable renderings of case and sweep reports."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Optional

from jinja2 import Environment, FileSystemLoader
from rich.table import Table

from .models import CaseReport
from .verification import SweepReport

DEFAULT_TEMPLATE = Path(__file__).parent / "templates" / "sweep.md.j2"


def _environment(template_path: Path) -> Environment:
    loader = FileSystemLoader(str(template_path.parent))
    return Environment(loader=loader, autoescape=False, keep_trailing_newline=True)


def _inline(values: Mapping[str, Any]) -> str:
    return ", ".join(f"{name}={value}" for name, value in values.items())


def _failure_reason(entry: Mapping[str, Any]) -> str:
    if entry.get("error"):
        return str(entry["error"])
    for check in entry.get("checks", []):
        if check.get("errors"):
            return f"{check['name']}: {check['errors'][0]}"
    return "failed"


def _rows(report: SweepReport) -> List[Dict[str, Any]]:
    rows = []
    for entry in report.entries:
        rows.append(
            {
                "case": entry["case"],
                "primes": _inline(entry.get("primes", {})),
                "params": _inline(entry.get("params", {})),
                "dimension": entry.get("dimension", "-"),
                "expected": entry.get("expected_dimension", "-"),
                "passed": bool(entry.get("passed")),
                "reason": "" if entry.get("passed") else _failure_reason(entry),
            }
        )
    return rows


def render_markdown(report: SweepReport, template_path: Optional[Path] = None) -> str:
    """Render a sweep as a Markdown summary."""

    template_path = template_path or DEFAULT_TEMPLATE
    env = _environment(template_path)
    template = env.get_template(template_path.name)
    rows = _rows(report)
    summary = report.to_dict()
    return template.render(
        dim=report.dim,
        totals={key: summary[key] for key in ("total", "passed", "failed")},
        entries=rows,
        failures=[row for row in rows if not row["passed"]],
        skipped=report.skipped,
    )


def write_markdown(report: SweepReport, output_path: Path, template_path: Optional[Path] = None) -> Path:
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(render_markdown(report, template_path))
    return output_path


def _mark(passed: bool) -> str:
    return "[green]pass[/green]" if passed else "[red]FAIL[/red]"


def case_table(report: CaseReport) -> Table:
    table = Table(title=f"{report.case} [{_inline(report.primes)}]")
    table.add_column("Check")
    table.add_column("Result")
    table.add_column("Details")
    for result in report.checks:
        details: List[str] = [msg.text for msg in result.errors] + [msg.text for msg in result.warnings]
        if result.name == "dim":
            details.insert(0, f"dimension {report.dimension}, expected {report.expected_dimension}")
        if "order" in result.data:
            details.append(f"antipode order {result.data['order']}")
        table.add_row(result.name, _mark(result.passed), "\n".join(details))
    return table


def sweep_table(report: SweepReport) -> Table:
    table = Table(title=f"Sweep {report.dim or 'all'}")
    for column in ("Case", "Primes", "Parameters", "Dim", "Result"):
        table.add_column(column)
    for row in _rows(report):
        table.add_row(row["case"], row["primes"], row["params"], str(row["dimension"]), _mark(row["passed"]))
    return table


def listing_table(cases: Iterable[Mapping[str, Any]]) -> Table:
    table = Table(title="Catalog")
    for column in ("Case", "Class", "Dimension", "Group", "Conditions"):
        table.add_column(column)
    for case in cases:
        conditions = "\n".join(item["statement"] for item in case.get("constraints", []))
        table.add_row(case["case"], case["class"], case["dimension"], case["group"], conditions)
    return table


def rows_table(title: str, columns: Iterable[str], rows: Iterable[Iterable[Any]]) -> Table:
    table = Table(title=title)
    for column in columns:
        table.add_column(column)
    for row in rows:
        table.add_row(*(str(value) for value in row))
    return table


__all__ = [
    "DEFAULT_TEMPLATE",
    "render_markdown",
    "write_markdown",
    "case_table",
    "sweep_table",
    "listing_table",
    "rows_table",
]
