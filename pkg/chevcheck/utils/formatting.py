import json
import re
from typing import Any, Iterable, Optional, Sequence


def root_label(coeffs: Sequence[int], symbol: str = "a") -> str:
    """Label a root given in simple-root coordinates, e.g. (3, 2) -> '3a1+2a2'."""
    parts: list[str] = []
    for i, c in enumerate(coeffs, start=1):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else str(abs(c))
        sign = "-" if c < 0 else "+"
        parts.append(f"{sign}{mag}{symbol}{i}")
    if not parts:
        return "0"
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


def vector_label(labels: Sequence[str], coeffs: Iterable[int]) -> str:
    terms: list[str] = []
    for label, c in zip(labels, coeffs):
        c = int(c)
        if c == 0:
            continue
        terms.append(label if c == 1 else f"{c}*{label}")
    return " + ".join(terms) if terms else "0"


def aligned_table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [[str(h) for h in header]] + [[str(v) for v in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(header))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def canonical_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def pretty_json_with_highlighting(obj: Any, indent: int = 2) -> Optional[str]:
    """Return pretty JSON with Rich markup for syntax highlighting."""
    try:
        pretty = json.dumps(obj, indent=indent, sort_keys=True, ensure_ascii=True)
    except (TypeError, ValueError):
        return None

    # Only "[" opens a Rich markup tag; escaping "]" would show a backslash.
    pretty = pretty.replace("[", r"\[")

    pretty = re.sub(r'"([^"]+)"\s*:', r'[cyan]"\1"[/]:', pretty)
    pretty = re.sub(r':\s*"([^"]*)"', r': [green]"\1"[/]', pretty)
    pretty = re.sub(r':\s*(-?\d+\.?\d*)', r': [yellow]\1[/]', pretty)
    pretty = re.sub(r':\s*(true|false|null)', r': [magenta]\1[/]', pretty)

    return pretty
