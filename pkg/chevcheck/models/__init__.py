from chevcheck.models.closure import ClosureStats
from chevcheck.models.log_entry import LogEntry
from chevcheck.models.report import Report, Scenario
from chevcheck.models.separability import SeparabilityReport

__all__ = ["ClosureStats", "LogEntry", "Report", "Scenario", "SeparabilityReport"]
