# Limits and defaults used by restheory.
#
# Each value may be overridden through the environment variable named next
# to it. Functions taking a cap= argument use these as their defaults.

import os


def _env_int(name, default):
    value = os.getenv(name)
    if value is None or value == '':
        return default
    return int(value)


CARRIER_CAP             = _env_int('RESTHEORY_CARRIER_CAP', 64)         # exhaustive validate
SAMPLE_TRIPLES          = _env_int('RESTHEORY_SAMPLE_TRIPLES', 20000)   # sampled validate
POWERSET_CAP            = _env_int('RESTHEORY_POWERSET_CAP', 256)       # 2**n subsets
TUPLE_CAP               = _env_int('RESTHEORY_TUPLE_CAP', 1000000)      # n**k tuples

CLOSED_SET_CARRIER_CAP  = _env_int('RESTHEORY_CLOSED_SET_CARRIER_CAP', 20)
CLOSED_SET_COUNT_CAP    = _env_int('RESTHEORY_CLOSED_SET_COUNT_CAP', 1000000)

# Subset-pair checks enumerate every pair and refuse larger carriers.
EXHAUSTIVE_SUBSET_CARRIER = 4

DEFAULT_SEED            = _env_int('RESTHEORY_SEED', 7)
DEFAULT_TRIALS          = _env_int('RESTHEORY_TRIALS', 200)
