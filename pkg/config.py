# Default axis i; (j, k) are the two remaining colors of {1, 2, 3}
DEFAULT_AXIS = 1

DEFAULT_BUDGET = 100000  # node expansions of the resolution search
DEFAULT_SEED = 0

CHORD_MAX_N = 24  # largest diagram drawn by rejection sampling
CHORD_MAX_TRIES = 200000

CONVERSION_SITE_LIMIT = 5000  # dipole sites tried per antipole

DISCREPANCY_FILE = None  # e.g. 'discrepancies.json'; None disables persistence

LOG_TO_STDERR = True
VERBOSE = False
