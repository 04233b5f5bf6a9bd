import math
import os

# Numeric contract
TOLERANCE    = 1e-9     # partition / constraint checks
CLAMP_DRIFT  = 1e-12    # float excursions outside [0,1] silently clamped
PRODUCT_BAND = 1e-9     # |ln s| below this evaluates the product branch
MIN_BRANCH_S = 1e-12    # s below this evaluates Min
LUK_BRANCH_S = 1e12     # s above this evaluates Lukasiewicz

LOG_MIN_BRANCH = math.log(MIN_BRANCH_S)
LOG_LUK_BRANCH = math.log(LUK_BRANCH_S)

# Display order of the five crisp values
VALUE_ORDER = ("t", "i", "u", "c", "f")

# Norm couples accepted by the set operations
COUPLE_NAMES = ("minmax", "prod", "luk")

# CLI defaults
DEFAULT_S_SPEC        = os.getenv("PENTA_DEFAULT_S",            "min")
DEFAULT_PRECISION     = int(os.getenv("PENTA_PRECISION",        "6"))
DEFAULT_FORMAT        = os.getenv("PENTA_FORMAT",               "csv").lower()
TRUTH_TABLE_MAX_VARS  = int(os.getenv("PENTA_TRUTH_TABLE_MAX_VARS", "6"))
IOTA_FILE_TOLERANCE   = float(os.getenv("PENTA_IOTA_TOLERANCE", "1e-6"))
LOG_LEVEL             = os.getenv("PENTA_LOG_LEVEL",            "INFO").upper()
