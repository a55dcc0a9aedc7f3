from dataclasses import dataclass


@dataclass(frozen=True)
class LogEntry:
    ts: str
    scenario_id: str
    level: str
    message: str
