from __future__ import annotations

from typing import Any, Optional

from chevcheck.models import LogEntry, Report, Scenario
from chevcheck.utils.formatting import pretty_json_with_highlighting

_STATUS_STYLE = {"pass": "green", "fail": "red", "skipped": "yellow"}


def status_line(
    status_msg: str,
    run_in_progress: bool,
    selected: Optional[str],
    counts: dict[str, int],
) -> str:
    run = "Running" if run_in_progress else "Idle"
    totals = " ".join(f"{k.upper()} {counts.get(k, 0)}" for k in ("pass", "fail", "skipped"))
    return f"[RUN {run}] [SCENARIO {selected or '-'}] [{totals}] {status_msg}"


def status_markup(status: Optional[str]) -> str:
    if not status:
        return "[dim]-[/]"
    style = _STATUS_STYLE.get(status, "white")
    return f"[{style}]{status}[/]"


def scenario_row(scenario: Scenario, report: Optional[Report]) -> tuple[str, str, str, str]:
    status = report.status if report else None
    elapsed = f"{report.elapsed_s:.2f}s" if report and report.elapsed_s is not None else ""
    title = f"{scenario.title} (shadow)" if scenario.shadow else scenario.title
    return status_markup(status), scenario.id, title, elapsed


def report_meta(scenario: Optional[Scenario], report: Optional[Report]) -> str:
    if scenario is None:
        return "No scenario selected"
    fields = ", ".join(report.fields) if report and report.fields else "not run"
    return f"{scenario.id} [{fields}]"


def _leaf(key: str, value: Any) -> str:
    text = str(value)
    if len(text) > 120:
        text = f"{text[:117]}..."
    return f"{key}: {text}"


def report_sections(scenario: Scenario, report: Optional[Report]) -> dict[str, list[str]]:
    """Tree sections for the details pane, in display order."""
    sections: dict[str, list[str]] = {"Claim": [scenario.claim]}
    if report is None:
        sections["Status"] = ["not run"]
        return sections
    sections["Status"] = [report.status] + ([report.reason] if report.reason else [])
    sections["Metrics"] = [_leaf(k, v) for k, v in sorted(report.metrics.items())]
    if report.witnesses:
        sections["Witnesses"] = [_leaf(k, v) for k, v in sorted(report.witnesses.items())]
    if report.failure:
        sections["Failure"] = [f"check: {report.failure.get('check')}"] + [
            _leaf(k, v) for k, v in sorted((report.failure.get("operands") or {}).items())
        ]
    return sections


def failure_markup(report: Report) -> str:
    """Failure operands as highlighted JSON, for the log pane."""
    if not report.failure:
        return ""
    pretty = pretty_json_with_highlighting(report.failure)
    return f"[bold red]Failed:[/] {report.failure.get('check')}\n{pretty or ''}"


def log_line(entry: LogEntry) -> str:
    return f"{entry.ts} | {entry.level:<7} | {entry.message}"
