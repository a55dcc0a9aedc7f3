"""chevcheck - exact computations in Chevalley groups over finite fields.

Copyright (c) 2026, pushkin
Licensed under the BSD 3-Clause License. See LICENSE file for details.
"""

from chevcheck.algebra import (
    chevalley_build,
    field_from_order,
    field_make,
    rootsystem_build,
    rootsystem_from_label,
)
from chevcheck.app import ChevcheckTui
from chevcheck.models import LogEntry, Report, Scenario
from chevcheck.utils.formatting import root_label, vector_label

__version__ = "0.1.0"

__all__ = [
    "ChevcheckTui",
    "LogEntry",
    "Report",
    "Scenario",
    "chevalley_build",
    "field_from_order",
    "field_make",
    "root_label",
    "rootsystem_build",
    "rootsystem_from_label",
    "vector_label",
]
