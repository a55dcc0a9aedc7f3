from __future__ import annotations

from typing import Any, Optional

from textual.app import ComposeResult
from textual.binding import Binding
from textual.containers import Horizontal, Vertical
from textual.screen import ModalScreen
from textual.widgets import Button, Input, Label

from chevcheck.scenarios import parse_field_label
from chevcheck.ui.styles import PARAMS_DIALOG_CSS
from chevcheck.utils.errors import ChevcheckError


def parse_field_list(text: str) -> Optional[list[int]]:
    """Parse 'gf4 gf8' or 'gf4,gf8' into field orders.

    Returns None if any label is not a characteristic 2 field.
    """
    labels = text.replace(",", " ").split()
    try:
        return [parse_field_label(label) for label in labels]
    except ChevcheckError:
        return None


def parse_positive_int(text: str) -> Optional[int]:
    try:
        value = int(text.strip())
    except ValueError:
        return None
    return value if value > 0 else None


def params_text(params: dict[str, Any]) -> tuple[str, str, str]:
    fields = " ".join(f"gf{q}" for q in params.get("fields") or ())
    budget = str(params["budget"]) if params.get("budget") else ""
    length = str(params["tuple_length"]) if params.get("tuple_length") else ""
    return fields, budget, length


class ParamsDialog(ModalScreen[Optional[dict[str, Any]]]):
    """Run parameters merged over each scenario's defaults."""

    BINDINGS = [Binding("escape", "cancel", "Cancel", show=False)]

    DEFAULT_CSS = PARAMS_DIALOG_CSS

    def __init__(self, current: Optional[dict[str, Any]] = None) -> None:
        super().__init__()
        self._current = dict(current or {})

    def compose(self) -> ComposeResult:
        fields, budget, length = params_text(self._current)
        with Vertical(id="params-dialog-container"):
            yield Label("Run parameters", id="params-dialog-title")
            yield Label("Fields (empty: scenario defaults)", classes="params-label")
            yield Input(fields, placeholder="gf4 gf8", id="params-fields")
            yield Label("Closure budget", classes="params-label")
            yield Input(budget, placeholder="2000000", id="params-budget")
            yield Label("Tuple length for the padded variant", classes="params-label")
            yield Input(length, placeholder="3", id="params-tuple")
            yield Label("", id="params-error")
            with Horizontal(id="params-buttons"):
                yield Button("Cancel", variant="default", id="params-cancel")
                yield Button("Apply", variant="primary", id="params-ok")

    def on_mount(self) -> None:
        self.query_one("#params-fields", Input).focus()

    def action_cancel(self) -> None:
        self.dismiss(None)

    def on_button_pressed(self, event: Button.Pressed) -> None:
        if event.button.id == "params-cancel":
            self.dismiss(None)
            return
        if event.button.id == "params-ok":
            self._apply()

    def _apply(self) -> None:
        error_label = self.query_one("#params-error", Label)
        params: dict[str, Any] = {}

        fields = parse_field_list(self.query_one("#params-fields", Input).value)
        if fields is None:
            error_label.update("Fields must be characteristic 2, e.g. gf4 gf8")
            return
        if fields:
            params["fields"] = fields

        for input_id, key, message in (
            ("#params-budget", "budget", "Budget must be a positive integer"),
            ("#params-tuple", "tuple_length", "Tuple length must be at least 2"),
        ):
            raw = self.query_one(input_id, Input).value
            if not raw.strip():
                continue
            value = parse_positive_int(raw)
            if value is None or (key == "tuple_length" and value < 2):
                error_label.update(message)
                return
            params[key] = value

        self.dismiss(params)
