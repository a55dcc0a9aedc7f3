from __future__ import annotations

import json
import logging
from collections import deque
from contextlib import contextmanager
from datetime import datetime
from typing import Any, Deque, Dict, Iterator, Optional

from chevcheck.models import LogEntry, Report, Scenario
from chevcheck.utils import LOG_MAX
from chevcheck.utils.formatting import canonical_json


class _StoreHandler(logging.Handler):
    def __init__(self, store: "ReportStore", scenario_id: str) -> None:
        super().__init__(logging.INFO)
        self.store = store
        self.scenario_id = scenario_id

    def emit(self, record: logging.LogRecord) -> None:
        self.store.append_log(self.scenario_id, record.levelname, record.getMessage())


class ReportStore:
    """What the browser shows: scenarios, their latest reports and per-scenario logs."""

    def __init__(self) -> None:
        self.scenarios: Dict[str, Scenario] = {}
        self.order: list[str] = []
        self.reports: Dict[str, Report] = {}
        self.logs: Dict[str, Deque[LogEntry]] = {}
        self.params: Dict[str, Any] = {}

    def replace_scenarios(self, scenarios: list[Scenario]) -> None:
        self.scenarios.clear()
        self.order.clear()
        for sc in scenarios:
            self.scenarios[sc.id] = sc
            self.order.append(sc.id)

    def set_report(self, report: Report) -> None:
        self.reports[report.scenario_id] = report
        if report.scenario_id not in self.order:
            self.order.append(report.scenario_id)

    def replace_reports(self, reports: list[Report]) -> None:
        self.reports.clear()
        for report in reports:
            self.set_report(report)

    def report(self, scenario_id: str) -> Optional[Report]:
        return self.reports.get(scenario_id)

    def status_of(self, scenario_id: str) -> str:
        report = self.reports.get(scenario_id)
        return report.status if report else "-"

    def ordered_reports(self) -> list[Report]:
        return [self.reports[i] for i in self.order if i in self.reports]

    def append_log(self, scenario_id: str, level: str, message: str) -> LogEntry:
        entry = LogEntry(
            ts=datetime.now().strftime("%H:%M:%S.%f")[:-3],
            scenario_id=scenario_id,
            level=level,
            message=message,
        )
        log = self.logs.setdefault(scenario_id, deque(maxlen=LOG_MAX))
        log.append(entry)
        return entry

    def clear_log(self, scenario_id: str) -> None:
        if scenario_id in self.logs:
            self.logs[scenario_id].clear()

    @contextmanager
    def capture(self, scenario_id: str, logger_name: str = "chevcheck") -> Iterator[None]:
        """Copy INFO records from the package loggers into the scenario log."""
        handler = _StoreHandler(self, scenario_id)
        logger = logging.getLogger(logger_name)
        previous, propagate = logger.level, logger.propagate
        logger.addHandler(handler)
        logger.propagate = False
        if logger.getEffectiveLevel() > logging.INFO:
            logger.setLevel(logging.INFO)
        try:
            yield
        finally:
            logger.removeHandler(handler)
            logger.setLevel(previous)
            logger.propagate = propagate

    def export_json(self, path: str, timing: bool = True) -> int:
        reports = self.ordered_reports()
        with open(path, "w", encoding="utf-8") as f:
            f.write(canonical_json([r.to_dict(timing=timing) for r in reports]))
        return len(reports)

    @staticmethod
    def load_json(path: str) -> list[Report]:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
        return [Report.from_dict(item) for item in data]
