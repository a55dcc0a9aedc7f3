"""
Report and scenario builders.

Reports built here never come from a real computation; they exercise the
store, renderers and browser without paying for closures.
"""
from pathlib import Path
from typing import Any, Optional

from chevcheck.models import Report, Scenario
from chevcheck.utils.formatting import canonical_json


class ReportBuilder:
    """Builder for Report objects."""

    def __init__(self, scenario_id: str = "S1", status: str = "pass"):
        self.scenario_id = scenario_id
        self.status = status
        self.title = f"Scenario {scenario_id}"
        self.claim = "A claim about G2."
        self.metrics: dict[str, Any] = {"checks": 3}
        self.witnesses: dict[str, Any] = {}
        self.fields: tuple[str, ...] = ("GF(4)",)
        self.failure: Optional[dict[str, Any]] = None
        self.reason: Optional[str] = None
        self.elapsed_s: Optional[float] = 0.25
        self.shadow = False

    def with_metric(self, name: str, value: Any) -> "ReportBuilder":
        self.metrics[name] = value
        return self

    def with_witness(self, name: str, value: Any) -> "ReportBuilder":
        self.witnesses[name] = value
        return self

    def with_failure(self, check: str, **operands: Any) -> "ReportBuilder":
        self.status = "fail"
        self.failure = {"check": check, "operands": operands, "checks_before": 2}
        return self

    def with_reason(self, reason: str) -> "ReportBuilder":
        self.status = "skipped"
        self.reason = reason
        return self

    def as_shadow(self) -> "ReportBuilder":
        self.shadow = True
        return self

    def build(self) -> Report:
        return Report(
            scenario_id=self.scenario_id,
            title=self.title,
            claim=self.claim,
            status=self.status,
            metrics=dict(self.metrics),
            witnesses=dict(self.witnesses),
            fields=self.fields,
            shadow=self.shadow,
            failure=self.failure,
            reason=self.reason,
            elapsed_s=self.elapsed_s,
        )


def create_test_scenario(scenario_id: str = "S1", shadow: bool = False) -> Scenario:
    return Scenario(
        id=scenario_id,
        title=f"Scenario {scenario_id}",
        claim="A claim about G2.",
        defaults={"fields": (4,)},
        shadow=shadow,
    )


def create_passing_report(scenario_id: str = "S1") -> Report:
    return ReportBuilder(scenario_id).with_metric("class_count_q4", 4).build()


def create_failed_report(scenario_id: str = "S6") -> Report:
    return ReportBuilder(scenario_id).with_failure("class count over GF(4)", got=3, want=4).build()


def create_skipped_report(scenario_id: str = "S4") -> Report:
    return ReportBuilder(scenario_id).with_reason("closure exceeded cap 10 (partial size 11)").build()


def write_report_file(path: Path, reports: list[Report]) -> Path:
    path.write_text(canonical_json([r.to_dict() for r in reports]), encoding="utf-8")
    return path
