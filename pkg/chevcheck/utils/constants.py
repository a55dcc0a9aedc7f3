MAX_FIELD_ORDER = 2**20
RATFUNC_DEGREE_BOUND = 64
MAX_RANK = 8

CLOSURE_CAP = 2_000_000
MATMUL_CHUNK = 2048

LOG_MAX = 200
ERROR_LOG_PATH = "chevcheck_errors.log"

REPORT_SCHEMA_VERSION = 1
DEFAULT_SUITE = "g2-char2"
DEFAULT_FIELDS = (4, 8)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_SKIPPED = 2
EXIT_USAGE = 3
