"""
Unit tests for the scenario service: lookup, parameter merging, report building and exit codes.

Scenario runners are replaced with small fakes so nothing here touches a group.
"""

import json
from unittest.mock import MagicMock, Mock, patch

import pytest

from chevcheck.models import Report, Scenario
from chevcheck.scenarios.g2_char2 import SCENARIOS, RegisteredScenario
from chevcheck.services.scenario_service import (
    get_scenario,
    merge_params,
    reports_to_json,
    resolve_ids,
    run_scenario,
    run_suite,
    scenario_ids,
    summary_exit_code,
    write_reports,
)
from chevcheck.utils.constants import DEFAULT_SUITE, EXIT_FAIL, EXIT_PASS, EXIT_SKIPPED
from chevcheck.utils.errors import BudgetExceededError, UnknownScenarioError
from tests.fixtures.report_fixtures import (
    create_failed_report,
    create_passing_report,
    create_skipped_report,
)


def _fake(scenario_id, runner, shadow=False, **defaults):
    scenario = Scenario(scenario_id, f"fake {scenario_id}", "a claim", dict(defaults), shadow)
    return {scenario_id: RegisteredScenario(scenario, runner)}


def _passing(c):
    c.that("one", True)
    c.equal("two", 2, 2)
    c.metric("answer", 42)
    c.witness("vector", [0, 1])
    c.uses("GF(4)")


def _failing(c):
    c.that("first", True)
    c.equal("|H|", 5, 6)


def _over_budget(c):
    c.that("first", True)
    raise BudgetExceededError("M(F_q) needs 3600 elements, budget is 10")


# =============================================================================
# Lookup and parameters
# =============================================================================

@pytest.mark.unit
def test_scenario_ids_sort_numerically():
    ids = scenario_ids()

    assert ids[0] == "S1"
    assert ids[-1] == "S10"
    assert ids.index("S2") < ids.index("S10")


@pytest.mark.unit
def test_get_scenario_ignores_case():
    assert get_scenario("s5").id == "S5"


@pytest.mark.unit
def test_get_scenario_unknown():
    with pytest.raises(UnknownScenarioError) as info:
        get_scenario("S99")

    assert "S10" in str(info.value)


@pytest.mark.unit
def test_merge_params_respects_pinned_fields():
    pinned = get_scenario("S5")
    sweeping = get_scenario("S6")
    params = {"fields": [4], "budget": 100, "tuple_length": None}

    assert merge_params(pinned, params) == {"budget": 100}
    assert merge_params(sweeping, params) == {"fields": [4], "budget": 100, "tuple_length": 3}


@pytest.mark.unit
def test_merge_params_without_params_returns_defaults_copy():
    sc = get_scenario("S6")

    merged = merge_params(sc, None)
    merged["fields"] = ()

    assert sc.defaults["fields"] == (4, 8)


@pytest.mark.unit
def test_resolve_ids_deduplicates_and_sorts():
    assert resolve_ids(["S10", "s2", "S2"]) == ["S2", "S10"]


@pytest.mark.unit
def test_resolve_ids_from_suite():
    assert resolve_ids(None, DEFAULT_SUITE) == [f"S{i}" for i in range(1, 11)]
    assert resolve_ids(None, None) == []


@pytest.mark.unit
def test_resolve_ids_unknown_suite():
    with pytest.raises(UnknownScenarioError):
        resolve_ids(None, "g2-char3")


# =============================================================================
# Running scenarios
# =============================================================================

@pytest.mark.unit
def test_run_scenario_pass():
    with patch.dict(SCENARIOS, _fake("S1", _passing)):
        report = run_scenario("S1")

    assert report.status == "pass"
    assert report.metrics == {"answer": 42, "checks": 2}
    assert report.witnesses == {"vector": [0, 1]}
    assert report.fields == ("GF(4)",)
    assert report.elapsed_s is not None


@pytest.mark.unit
def test_run_scenario_fail_records_operands():
    with patch.dict(SCENARIOS, _fake("S5", _failing)):
        report = run_scenario("S5")

    assert report.status == "fail"
    assert report.failure == {"check": "|H|", "operands": {"got": 5, "want": 6}, "checks_before": 1}
    assert report.metrics["checks"] == 2


@pytest.mark.unit
def test_run_scenario_budget_is_skipped():
    with patch.dict(SCENARIOS, _fake("S4", _over_budget, shadow=True)):
        report = run_scenario("S4")

    assert report.status == "skipped"
    assert "3600" in report.reason
    assert report.shadow


@pytest.mark.unit
def test_run_scenario_passes_merged_params():
    runner = Mock()
    with patch.dict(SCENARIOS, _fake("S6", runner, fields=(4, 8))):
        run_scenario("S6", {"fields": [8], "budget": 7})

    checks = runner.call_args.args[0]
    assert checks.params == {"fields": [8], "budget": 7}
    assert checks.budget == 7


@pytest.mark.unit
def test_unexpected_errors_propagate():
    runner = Mock(side_effect=ZeroDivisionError("bug"))
    with patch.dict(SCENARIOS, _fake("S1", runner)):
        with pytest.raises(ZeroDivisionError):
            run_scenario("S1")


@pytest.mark.unit
def test_run_suite_keeps_id_order():
    fakes = {**_fake("S2", _passing), **_fake("S10", _failing), **_fake("S1", _passing)}
    with patch.dict(SCENARIOS, fakes):
        reports = run_suite(["S10", "S1", "S2"])

    assert [r.scenario_id for r in reports] == ["S1", "S2", "S10"]
    assert summary_exit_code(reports) == EXIT_FAIL


@pytest.mark.unit
def test_run_suite_empty():
    assert run_suite([]) == []


@pytest.mark.unit
def test_run_suite_single_id_stays_in_process():
    with patch.dict(SCENARIOS, _fake("S1", _passing)):
        with patch("chevcheck.services.scenario_service.ProcessPoolExecutor") as pool:
            reports = run_suite(["S1"], jobs=4)

    pool.assert_not_called()
    assert reports[0].passed


@pytest.mark.unit
def test_run_suite_uses_workers_for_several_ids():
    pool = MagicMock()
    pool.__enter__.return_value = pool
    pool.map.return_value = iter([create_passing_report(), create_failed_report()])
    with patch("chevcheck.services.scenario_service.ProcessPoolExecutor", return_value=pool) as ctor:
        reports = run_suite(["S1", "S6"], {"budget": 5}, jobs=8)

    ctor.assert_called_once_with(max_workers=2)
    jobs = list(pool.map.call_args.args[1])
    assert jobs == [("S1", {"budget": 5}), ("S6", {"budget": 5})]
    assert len(reports) == 2


# =============================================================================
# Exit codes and JSON
# =============================================================================

@pytest.mark.unit
@pytest.mark.parametrize(
    "reports, code",
    [
        ([], EXIT_PASS),
        ([create_passing_report()], EXIT_PASS),
        ([create_passing_report(), create_skipped_report()], EXIT_SKIPPED),
        ([create_skipped_report(), create_failed_report()], EXIT_FAIL),
    ],
)
def test_summary_exit_code(reports, code):
    assert summary_exit_code(reports) == code


@pytest.mark.unit
def test_reports_to_json_without_timing_is_deterministic():
    a = Report("S1", "t", "c", "pass", metrics={"checks": 1}, elapsed_s=0.25)
    b = Report("S1", "t", "c", "pass", metrics={"checks": 1}, elapsed_s=9.5)

    assert reports_to_json([a], timing=False) == reports_to_json([b], timing=False)
    assert reports_to_json([a]) != reports_to_json([b])


@pytest.mark.unit
def test_write_reports(tmp_path):
    path = tmp_path / "out.json"

    write_reports(str(path), [create_passing_report(), create_failed_report()], timing=False)

    data = json.loads(path.read_text(encoding="utf-8"))
    assert [d["scenario_id"] for d in data] == ["S1", "S6"]
    assert all("elapsed_s" not in d for d in data)
    assert Report.from_dict(data[1]).status == "fail"
