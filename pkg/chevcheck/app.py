#!/usr/bin/env python3
from __future__ import annotations

import asyncio
from typing import Any, Optional

from textual import events
from textual.app import App, ComposeResult
from textual.containers import Grid, Vertical
from textual.widgets import DataTable, Footer, Header, RichLog, Static, Tree

from chevcheck.models import Report
from chevcheck.services import ReportStore, get_scenario, run_scenario, scenario_ids
from chevcheck.ui.params_dialog import ParamsDialog
from chevcheck.ui.renderers import (
    failure_markup,
    log_line,
    report_meta,
    report_sections,
    scenario_row,
    status_line,
)
from chevcheck.ui.styles import APP_CSS
from chevcheck.utils import ERROR_LOG_PATH, format_cli_error, record_error

DEFAULT_EXPORT_PATH = "chevcheck_report.json"


class ChevcheckTui(App):
    ENABLE_COMMAND_PALETTE = False
    CSS = APP_CSS
    TITLE = "chevcheck"

    BINDINGS = [
        ("tab", "next_pane", "Next Pane"),
        ("shift+tab", "prev_pane", "Prev Pane"),
        ("r", "run_selected", "Run"),
        ("a", "run_all", "Run All"),
        ("p", "edit_params", "Params"),
        ("e", "export", "Export"),
        ("l", "clear_log", "Clear"),
        ("q", "quit", "Quit"),
    ]

    def __init__(
        self,
        report_path: Optional[str] = None,
        export_path: str = DEFAULT_EXPORT_PATH,
    ) -> None:
        super().__init__()
        self._store = ReportStore()
        self._run_lock = asyncio.Lock()
        self._report_path = report_path
        self._export_path = export_path
        self._selected: Optional[str] = None
        self._run_in_progress = False
        self._status_msg = "Ready"

    def compose(self) -> ComposeResult:
        yield Header()
        with Grid(id="main"):
            with Vertical(classes="pane right-divider"):
                yield Static("Scenarios", classes="pane-title")
                yield DataTable(id="scenarios")
            with Vertical(classes="pane right-divider"):
                yield Static("Report", classes="pane-title")
                yield Static("No scenario selected", id="report_meta")
                yield Tree("Report", id="details")
            with Vertical(classes="pane"):
                yield Static("Log", classes="pane-title")
                yield RichLog(id="log", wrap=True, markup=True)
        yield Static("Ready", id="status")
        yield Footer()

    async def on_mount(self) -> None:
        table = self.query_one("#scenarios", DataTable)
        table.add_columns("Status", "Id", "Title", "Time")
        table.cursor_type = "row"
        table.zebra_stripes = True
        self._store.replace_scenarios([get_scenario(i) for i in scenario_ids()])
        if self._report_path:
            self._load_reports(self._report_path)
        self._render_table()
        if self._store.order:
            self._select(self._store.order[0])
        table.focus()

    # status and errors

    def _set_status(self, msg: str) -> None:
        self._status_msg = msg
        self._render_status()

    def _render_status(self) -> None:
        counts: dict[str, int] = {}
        for report in self._store.reports.values():
            counts[report.status] = counts.get(report.status, 0) + 1
        line = status_line(
            status_msg=self._status_msg,
            run_in_progress=self._run_in_progress,
            selected=self._selected,
            counts=counts,
        )
        status = self.query_one("#status", Static)
        status.update(line)
        status.set_class(self._run_in_progress, "running")
        status.set_class(counts.get("fail", 0) > 0, "has-failures")

    def _record_error(self, context: str, exc: Exception) -> None:
        record_error(context, exc, ERROR_LOG_PATH)

    def _load_reports(self, path: str) -> None:
        try:
            reports = self._store.load_json(path)
        except (OSError, ValueError, KeyError) as exc:
            self._record_error("load_reports", exc)
            self._set_status(format_cli_error("Load", exc, ERROR_LOG_PATH))
            return
        self._store.replace_reports(reports)
        self._set_status(f"Loaded {len(reports)} report(s) from {path}")

    # rendering

    def _render_table(self) -> None:
        table = self.query_one("#scenarios", DataTable)
        table.clear()
        for scenario_id in self._store.order:
            scenario = self._store.scenarios.get(scenario_id)
            if scenario is None:
                continue
            table.add_row(*scenario_row(scenario, self._store.report(scenario_id)), key=scenario_id)
        if self._selected in self._store.order:
            table.move_cursor(row=self._store.order.index(self._selected), column=0)

    def _render_details(self, scenario_id: Optional[str]) -> None:
        tree = self.query_one("#details", Tree)
        tree.clear()
        scenario = self._store.scenarios.get(scenario_id) if scenario_id else None
        report = self._store.report(scenario_id) if scenario_id else None
        self.query_one("#report_meta", Static).update(report_meta(scenario, report))
        if scenario is None:
            return
        tree.root.label = f"{scenario.id}: {scenario.title}"
        for section, lines in report_sections(scenario, report).items():
            node = tree.root.add(section, expand=section != "Claim")
            for line in lines:
                node.add_leaf(line)
        tree.root.expand()

    def _render_log(self, scenario_id: Optional[str]) -> None:
        log_view = self.query_one("#log", RichLog)
        log_view.clear()
        if scenario_id is None:
            return
        for entry in self._store.logs.get(scenario_id, []):
            log_view.write(log_line(entry))
        report = self._store.report(scenario_id)
        if report is not None and report.failure:
            log_view.write(failure_markup(report))

    def _select(self, scenario_id: Optional[str]) -> None:
        self._selected = scenario_id
        self._render_details(scenario_id)
        self._render_log(scenario_id)
        self._render_status()

    # running

    def _run_blocking(self, scenario_id: str, params: dict[str, Any]) -> Report:
        with self._store.capture(scenario_id):
            return run_scenario(scenario_id, params)

    async def _run_ids(self, ids: list[str]) -> None:
        if self._run_in_progress:
            self._set_status("A run is already in progress.")
            return
        async with self._run_lock:
            self._run_in_progress = True
            try:
                for scenario_id in ids:
                    self._set_status(f"Running {scenario_id}...")
                    try:
                        report = await asyncio.to_thread(
                            self._run_blocking, scenario_id, dict(self._store.params)
                        )
                    except Exception as exc:
                        self._record_error(f"run {scenario_id}", exc)
                        self._store.append_log(scenario_id, "ERROR", str(exc))
                        self._set_status(format_cli_error(f"Run {scenario_id}", exc, ERROR_LOG_PATH))
                        continue
                    self._store.set_report(report)
                    self._render_table()
                    if scenario_id == self._selected:
                        self._select(scenario_id)
                    self._set_status(f"{scenario_id}: {report.status}")
            finally:
                self._run_in_progress = False
                self._render_status()

    async def action_run_selected(self) -> None:
        self._select_from_cursor()
        if not self._selected:
            self._set_status("Select a scenario first.")
            return
        await self._run_ids([self._selected])

    async def action_run_all(self) -> None:
        await self._run_ids(list(self._store.order))
        counts = {s: 0 for s in ("pass", "fail", "skipped")}
        for report in self._store.reports.values():
            counts[report.status] = counts.get(report.status, 0) + 1
        self._set_status(
            f"Suite done: {counts['pass']} pass, {counts['fail']} fail, {counts['skipped']} skipped."
        )

    def action_edit_params(self) -> None:
        def _on_dismiss(result: Optional[dict[str, Any]]) -> None:
            if result is None:
                return
            self._store.params = result
            self._set_status(f"Parameters: {result or 'scenario defaults'}")

        self.push_screen(ParamsDialog(self._store.params), callback=_on_dismiss)

    def action_export(self) -> None:
        try:
            count = self._store.export_json(self._export_path)
        except OSError as exc:
            self._record_error("export", exc)
            self._set_status(format_cli_error("Export", exc, ERROR_LOG_PATH))
            return
        self._set_status(f"Exported {count} report(s) to {self._export_path}")

    def action_clear_log(self) -> None:
        if not self._selected:
            self._set_status("No scenario selected to clear.")
            return
        self._store.clear_log(self._selected)
        self._render_log(self._selected)
        self._set_status(f"Cleared log for {self._selected}")

    # navigation

    def _select_from_cursor(self) -> bool:
        table = self.query_one("#scenarios", DataTable)
        row = table.cursor_row
        if row is None or row >= len(self._store.order):
            return False
        if self._store.order[row] != self._selected:
            self._select(self._store.order[row])
        return True

    async def on_data_table_row_highlighted(self, event: DataTable.RowHighlighted) -> None:
        if event.row_key.value != self._selected:
            self._select(event.row_key.value)

    async def on_data_table_row_selected(self, event: DataTable.RowSelected) -> None:
        if event.row_key.value != self._selected:
            self._select(event.row_key.value)

    def _pane_widgets(self) -> list[Any]:
        return [
            self.query_one("#scenarios", DataTable),
            self.query_one("#details", Tree),
            self.query_one("#log", RichLog),
        ]

    async def action_next_pane(self) -> None:
        panes = self._pane_widgets()
        current = self.focused
        if current not in panes:
            panes[0].focus()
            return
        idx = panes.index(current)
        panes[(idx + 1) % len(panes)].focus()

    async def action_prev_pane(self) -> None:
        panes = self._pane_widgets()
        current = self.focused
        if current not in panes:
            panes[-1].focus()
            return
        idx = panes.index(current)
        panes[(idx - 1) % len(panes)].focus()

    async def on_key(self, event: events.Key) -> None:
        if event.key == "enter" and isinstance(self.focused, DataTable):
            event.prevent_default()
            event.stop()
            await self.action_run_selected()


__all__ = ["ChevcheckTui"]
