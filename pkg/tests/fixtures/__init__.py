"""
Test fixtures for chevcheck.

Provides report and scenario builders for service, renderer and TUI tests.
"""
from tests.fixtures.report_fixtures import (
    ReportBuilder,
    create_failed_report,
    create_passing_report,
    create_skipped_report,
    create_test_scenario,
    write_report_file,
)

__all__ = [
    "ReportBuilder",
    "create_failed_report",
    "create_passing_report",
    "create_skipped_report",
    "create_test_scenario",
    "write_report_file",
]
