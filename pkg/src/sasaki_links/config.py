"""
Configuration settings for the Sasaki links toolkit.
"""

# Sporadic hypersurfaces with canonical index 1 (b2 -> listed weights, polynomial).
# Notes:
# - the first row's listed weights are not a weight system for its polynomial;
#   the inferred weights are (3, 6, 6, 8) with degree 24
SPORADIC_TABLE = [
    {"b2": 0, "w": (5, 6, 6, 8),   "poly": "z0^8+z1^4+z2^4+z3^3"},
    {"b2": 1, "w": (2, 4, 6, 11),  "poly": "z0^12+z1^6+z2^4+z3^2*z0"},
    {"b2": 2, "w": (6, 7, 28, 42), "poly": "z0^14+z1^12+z2^3+z3^2"},
    {"b2": 4, "w": (4, 5, 20, 30), "poly": "z0^15+z1^12+z2^3+z3^2"},
    {"b2": 6, "w": (3, 4, 12, 16), "poly": "z0^12+z1^9+z2^3+z3^2*z1"},
]

# Parameters checked for the two infinite series of negative 5-manifolds
FIRST_SERIES_KS = (1, 2, 3)
SECOND_SERIES_KS = (9, 11, 13, 15)

# Poincare sphere L(2,3,5)
POINCARE_EXPONENTS = (2, 3, 5)
POINCARE_ORDER = 30
POINCARE_FANO_INDEX = 1
ICOSAHEDRAL_ORDER = 60

# Search defaults
DEFAULT_N = 2
DEFAULT_BOUND = 13
DEFAULT_KL_BOUND = 10
DEFAULT_BUDGET = 200
DEFAULT_WORKERS = 1

# Upper limit on prod(a_i - 1) for the brute-force eigenvalue count
BRUTEFORCE_BUDGET = 2_000_000

# Exhaustive sweep limits used by the reference checks
ORACLE_MAX_EXPONENT = 6
SWEEP_MAX_ENTRY = 30
RANDOM_BP_SEED = 20111
RANDOM_BP_COUNT = 100
RANDOM_BP_MAX_EXPONENT = 12

# Application settings
APP_NAME = "sasaki-links"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
REPORT_WIDTH = 60
