from chevcheck.utils.constants import (
    CLOSURE_CAP,
    DEFAULT_SUITE,
    ERROR_LOG_PATH,
    LOG_MAX,
    MAX_FIELD_ORDER,
    REPORT_SCHEMA_VERSION,
)
from chevcheck.utils.errors import ChevcheckError, format_cli_error, record_error
from chevcheck.utils.formatting import (
    canonical_json,
    pretty_json_with_highlighting,
    root_label,
    vector_label,
)

__all__ = [
    "CLOSURE_CAP",
    "DEFAULT_SUITE",
    "ERROR_LOG_PATH",
    "LOG_MAX",
    "MAX_FIELD_ORDER",
    "REPORT_SCHEMA_VERSION",
    "ChevcheckError",
    "format_cli_error",
    "record_error",
    "canonical_json",
    "pretty_json_with_highlighting",
    "root_label",
    "vector_label",
]
