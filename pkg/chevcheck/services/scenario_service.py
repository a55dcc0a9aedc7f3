from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Iterable, Optional

from chevcheck.models import Report, Scenario
from chevcheck.scenarios.g2_char2 import SCENARIOS, SUITES, Checks
from chevcheck.utils.constants import DEFAULT_SUITE, EXIT_FAIL, EXIT_PASS, EXIT_SKIPPED
from chevcheck.utils.errors import (
    BudgetExceededError,
    ClosureBudgetError,
    ScenarioAssertionError,
    UnknownScenarioError,
)
from chevcheck.utils.formatting import canonical_json

logger = logging.getLogger(__name__)


def _id_key(scenario_id: str) -> tuple[int, str]:
    digits = "".join(ch for ch in scenario_id if ch.isdigit())
    return (int(digits) if digits else 0, scenario_id)


def scenario_ids() -> list[str]:
    return sorted(SCENARIOS, key=_id_key)


def get_scenario(scenario_id: str) -> Scenario:
    entry = SCENARIOS.get(scenario_id.upper())
    if entry is None:
        raise UnknownScenarioError(scenario_id, scenario_ids())
    return entry.scenario


def merge_params(scenario: Scenario, params: Optional[dict[str, Any]]) -> dict[str, Any]:
    """Scenario defaults overridden by run parameters.

    `fields` only reaches scenarios that sweep over q; the others pin
    their fields.
    """
    merged = dict(scenario.defaults)
    for key, value in (params or {}).items():
        if value is None:
            continue
        if key == "fields" and "fields" not in scenario.defaults:
            continue
        merged[key] = value
    return merged


def run_scenario(scenario_id: str, params: Optional[dict[str, Any]] = None) -> Report:
    scenario = get_scenario(scenario_id)
    runner = SCENARIOS[scenario.id].runner
    checks = Checks(merge_params(scenario, params))
    status, failure, reason = "pass", None, None
    logger.info("running %s: %s", scenario.id, scenario.title)
    start = time.perf_counter()
    try:
        runner(checks)
    except ScenarioAssertionError as exc:
        status = "fail"
        failure = {"check": exc.check, "operands": exc.operands, "checks_before": checks.count - 1}
    except (ClosureBudgetError, BudgetExceededError) as exc:
        status = "skipped"
        reason = str(exc)
    elapsed = time.perf_counter() - start
    logger.info("%s %s after %d checks in %.2fs", scenario.id, status, checks.count, elapsed)

    metrics = dict(checks.metrics)
    metrics["checks"] = checks.count
    return Report(
        scenario_id=scenario.id,
        title=scenario.title,
        claim=scenario.claim,
        status=status,
        metrics=metrics,
        witnesses=dict(checks.witnesses),
        fields=tuple(checks.fields),
        shadow=scenario.shadow,
        failure=failure,
        reason=reason,
        elapsed_s=round(elapsed, 3),
    )


def _run_job(job: tuple[str, Optional[dict[str, Any]]]) -> Report:
    return run_scenario(*job)


def resolve_ids(ids: Optional[Iterable[str]] = None, suite: Optional[str] = DEFAULT_SUITE) -> list[str]:
    """Explicit ids win over the suite; both are checked against the registry."""
    if ids is not None:
        chosen = [get_scenario(i).id for i in ids]
    elif suite is not None:
        if suite not in SUITES:
            raise UnknownScenarioError(suite, sorted(SUITES))
        chosen = list(SUITES[suite])
    else:
        chosen = []
    return sorted(dict.fromkeys(chosen), key=_id_key)


def run_suite(
    ids: Iterable[str],
    params: Optional[dict[str, Any]] = None,
    jobs: int = 1,
) -> list[Report]:
    """Reports in id order, whatever order the workers finish in."""
    ordered = resolve_ids(ids)
    if not ordered:
        return []
    if jobs <= 1 or len(ordered) == 1:
        return [run_scenario(i, params) for i in ordered]
    with ProcessPoolExecutor(max_workers=min(jobs, len(ordered))) as pool:
        return list(pool.map(_run_job, [(i, params) for i in ordered]))


def summary_exit_code(reports: Iterable[Report]) -> int:
    statuses = {r.status for r in reports}
    if "fail" in statuses:
        return EXIT_FAIL
    if "skipped" in statuses:
        return EXIT_SKIPPED
    return EXIT_PASS


def reports_to_json(reports: Iterable[Report], timing: bool = True) -> str:
    return canonical_json([r.to_dict(timing=timing) for r in reports])


def write_reports(path: str, reports: Iterable[Report], timing: bool = True) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(reports_to_json(reports, timing=timing))
