import pytest

from chevcheck.models import LogEntry
from chevcheck.ui.renderers import (
    failure_markup,
    log_line,
    report_meta,
    report_sections,
    scenario_row,
    status_line,
    status_markup,
)
from tests.fixtures.report_fixtures import (
    ReportBuilder,
    create_failed_report,
    create_passing_report,
    create_skipped_report,
    create_test_scenario,
)


@pytest.mark.unit
def test_status_line_idle_nothing_selected():
    line = status_line(status_msg="Ready", run_in_progress=False, selected=None, counts={})

    assert "[RUN Idle]" in line
    assert "[SCENARIO -]" in line
    assert "[PASS 0 FAIL 0 SKIPPED 0]" in line
    assert line.endswith("Ready")


@pytest.mark.unit
def test_status_line_running_with_counts():
    line = status_line(
        status_msg="Running S6",
        run_in_progress=True,
        selected="S6",
        counts={"pass": 3, "fail": 1},
    )

    assert "[RUN Running]" in line
    assert "[SCENARIO S6]" in line
    assert "[PASS 3 FAIL 1 SKIPPED 0]" in line


@pytest.mark.unit
@pytest.mark.parametrize(
    "status, markup",
    [("pass", "[green]pass[/]"), ("fail", "[red]fail[/]"), ("skipped", "[yellow]skipped[/]"), (None, "[dim]-[/]")],
)
def test_status_markup(status, markup):
    assert status_markup(status) == markup


@pytest.mark.unit
def test_scenario_row_not_run():
    row = scenario_row(create_test_scenario("S2"), None)

    assert row == ("[dim]-[/]", "S2", "Scenario S2", "")


@pytest.mark.unit
def test_scenario_row_marks_shadows_and_time():
    row = scenario_row(create_test_scenario("S6", shadow=True), create_failed_report("S6"))

    assert row[0] == "[red]fail[/]"
    assert row[2] == "Scenario S6 (shadow)"
    assert row[3] == "0.25s"


@pytest.mark.unit
def test_report_meta_none_and_with_report():
    assert report_meta(None, None) == "No scenario selected"
    assert report_meta(create_test_scenario("S1"), None) == "S1 [not run]"
    assert report_meta(create_test_scenario("S1"), create_passing_report()) == "S1 [GF(4)]"


@pytest.mark.unit
def test_report_sections_not_run():
    sections = report_sections(create_test_scenario(), None)

    assert list(sections) == ["Claim", "Status"]
    assert sections["Status"] == ["not run"]


@pytest.mark.unit
def test_report_sections_passing():
    report = ReportBuilder("S5").with_witness("H_in_G", [[0, 1]]).build()

    sections = report_sections(create_test_scenario("S5"), report)

    assert list(sections) == ["Claim", "Status", "Metrics", "Witnesses"]
    assert sections["Metrics"] == ["checks: 3"]
    assert sections["Witnesses"] == ["H_in_G: [[0, 1]]"]


@pytest.mark.unit
def test_report_sections_failure_and_skip():
    failed = report_sections(create_test_scenario("S6"), create_failed_report())
    skipped = report_sections(create_test_scenario("S4"), create_skipped_report())

    assert failed["Failure"] == ["check: class count over GF(4)", "got: 3", "want: 4"]
    assert skipped["Status"][0] == "skipped"
    assert skipped["Status"][1].startswith("closure exceeded")


@pytest.mark.unit
def test_long_leaves_are_truncated():
    report = ReportBuilder().with_metric("labels", list(range(100))).build()

    leaf = next(x for x in report_sections(create_test_scenario(), report)["Metrics"] if x.startswith("labels"))

    assert leaf.endswith("...")
    assert len(leaf) == len("labels: ") + 120


@pytest.mark.unit
def test_failure_markup():
    assert failure_markup(create_passing_report()) == ""
    markup = failure_markup(create_failed_report())
    assert markup.startswith("[bold red]Failed:[/] class count over GF(4)")
    assert "[cyan]" in markup


@pytest.mark.unit
def test_log_line_format():
    entry = LogEntry(ts="12:00:00.000", scenario_id="S5", level="INFO", message="closure H: order 6")

    assert log_line(entry) == "12:00:00.000 | INFO    | closure H: order 6"
