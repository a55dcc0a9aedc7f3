from dataclasses import dataclass, field
from typing import Any, Optional

from chevcheck.utils.constants import REPORT_SCHEMA_VERSION

STATUSES = ("pass", "fail", "skipped")


@dataclass(frozen=True)
class Scenario:
    id: str
    title: str
    claim: str
    defaults: dict[str, Any] = field(default_factory=dict)
    shadow: bool = False
    slow: bool = False


@dataclass(frozen=True)
class Report:
    scenario_id: str
    title: str
    claim: str
    status: str
    metrics: dict[str, Any] = field(default_factory=dict)
    witnesses: dict[str, Any] = field(default_factory=dict)
    fields: tuple[str, ...] = ()
    shadow: bool = False
    failure: Optional[dict[str, Any]] = None
    reason: Optional[str] = None
    elapsed_s: Optional[float] = None
    schema_version: int = REPORT_SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = True) -> dict[str, Any]:
        out: dict[str, Any] = {
            "scenario_id": self.scenario_id,
            "title": self.title,
            "claim": self.claim,
            "status": self.status,
            "metrics": self.metrics,
            "witnesses": self.witnesses,
            "fields": list(self.fields),
            "shadow": self.shadow,
            "failure": self.failure,
            "reason": self.reason,
            "schema_version": self.schema_version,
        }
        if timing:
            out["elapsed_s"] = self.elapsed_s
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Report":
        return cls(
            scenario_id=data["scenario_id"],
            title=data.get("title", ""),
            claim=data.get("claim", ""),
            status=data["status"],
            metrics=dict(data.get("metrics") or {}),
            witnesses=dict(data.get("witnesses") or {}),
            fields=tuple(data.get("fields") or ()),
            shadow=bool(data.get("shadow", False)),
            failure=data.get("failure"),
            reason=data.get("reason"),
            elapsed_s=data.get("elapsed_s"),
            schema_version=int(data.get("schema_version", REPORT_SCHEMA_VERSION)),
        )
