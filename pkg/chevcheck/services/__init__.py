from chevcheck.services.report_store import ReportStore
from chevcheck.services.scenario_service import (
    get_scenario,
    reports_to_json,
    resolve_ids,
    run_scenario,
    run_suite,
    scenario_ids,
    summary_exit_code,
    write_reports,
)

__all__ = [
    "ReportStore",
    "get_scenario",
    "reports_to_json",
    "resolve_ids",
    "run_scenario",
    "run_suite",
    "scenario_ids",
    "summary_exit_code",
    "write_reports",
]
