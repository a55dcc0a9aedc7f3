from chevcheck.scenarios.g2_char2 import SCENARIOS, SUITES, Checks, parse_field_label
from chevcheck.scenarios.lab import G2Lab

__all__ = ["SCENARIOS", "SUITES", "Checks", "G2Lab", "parse_field_label"]
