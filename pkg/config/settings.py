"""
Application Settings and Configuration
"""

import os
from pathlib import Path


# Application Info
APP_NAME = "Hasse Defect Explorer"
APP_VERSION = "0.1.0"

# Paths
APP_DIR = Path(__file__).parent.parent
DATA_DIR = APP_DIR / "data"
FIXTURE_PATH = DATA_DIR / "dw_fixture_146.csv"

# Published splits over the fixture
FIXTURE_EXPECTED = {
    "count": 146,
    "defect1": 61,
    "defect2": 85,
    "mrd2": 26,
}

# Search / sieve defaults
WHEEL_MODULUS = 510510          # 2*3*5*7*11*13*17
WHEEL_PRIMES = (2, 3, 5, 7, 11, 13, 17)
SEGMENT_SIZE = 2 ** 20          # rounded up to whole wheel turns by the search
X_BLOCK_SIZE = 2 ** 22          # third-sieve bitset block
RECIPROCAL_SUM_LIMIT = 10 ** 10  # exact prime-reciprocal sums stop here

# Threshold bracket refinement starts at this many decimal digits
DIGIT_START = 30

# Worker count: --threads wins, then the environment, then 1
THREADS_ENV_VAR = "HASSE_THREADS"
DEFAULT_THREADS = 1


def default_threads() -> int:
    """Thread count from the environment, falling back to DEFAULT_THREADS."""
    raw = os.environ.get(THREADS_ENV_VAR, "").strip()
    if not raw:
        return DEFAULT_THREADS
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_THREADS
    return value if value >= 1 else DEFAULT_THREADS


# Published prime counts, keyed by exponent k of the bound 10^k.
# Table 1: (x^2+x+1, x^2+1); Table 2: (x^2+2, x^2+x+3)
PUBLISHED_TABLE_1 = {
    1: (2, 2), 2: (5, 4), 3: (14, 10), 4: (31, 19), 5: (76, 51),
    6: (189, 112), 7: (520, 316), 8: (1410, 841), 9: (3825, 2378),
    10: (10751, 6656), 11: (30580, 18822), 12: (88118, 54110),
}
PUBLISHED_TABLE_2 = {
    1: (2, 1), 2: (3, 4), 3: (5, 7), 4: (11, 14), 5: (27, 36),
    6: (68, 93), 7: (161, 244), 8: (446, 628), 9: (1236, 1707),
    10: (3422, 4899), 11: (9776, 13861), 12: (27868, 40036),
}

# Direct counts for the two rows of the published x^2+x+1 column that are
# one short (73 = 8^2+8+1 is prime and below 10^2).
TABLE_1_ERRATA = {2: 6, 4: 32}

# Viewer window settings
WINDOW_MIN_WIDTH = 900
WINDOW_MIN_HEIGHT = 600
WINDOW_DEFAULT_WIDTH = 1100
WINDOW_DEFAULT_HEIGHT = 750

# Viewer tabs - order and names
TABS = [
    ("Deuring-Waterhouse", "dw"),
    ("Prime Counts", "prime_counts"),
]
