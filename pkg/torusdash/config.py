"""
Configuration constants for TorusDash.

This module centralizes the enumeration bounds, output formats and exit codes
shared by the library, the command line and the acceptance suite.
"""

import os

from .errors import ConfigError

# Weyl group enumeration
SIZE_CAP = 1_000_000

# psi weight enumeration: entries of every weight vector range over [-bound, bound]
PSI_BOUND_DEFAULT = 1
PSI_BOUND_ENV = "TORUS_PSI_BOUND"

# Base catalog: pt, S^2 and S^2 x S^2 with circle actions
MAX_L0 = 2

# Exit codes
EXIT_OK = 0
EXIT_CLASSIFICATION_ERROR = 1
EXIT_USAGE_ERROR = 2

# Machine-readable record schema (one JSON object per class, field order fixed)
RECORD_FIELDS = [
    "spec", "psi", "base", "A", "B", "a",
    "name", "chi", "dim", "orbit_space_dim",
    "quasitoric", "simply_connected", "source",
]

# Human table columns
TABLE_COLUMNS = ["spec", "tuple", "name"]

# Golden table format
TABLE_SEP = "\t"
LINE_TERMINATOR = "\n"

# Row provenance
SOURCE_TABULATED = "tabulated"
SOURCE_UNVERIFIED = "unverified"

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def psi_bound(default=PSI_BOUND_DEFAULT):
    """
    Return the psi weight bound, honouring the TORUS_PSI_BOUND override.

    Args:
        default: Bound used when the environment variable is unset

    Returns:
        Non-negative integer bound

    Example:
        psi_bound()  # 1 unless TORUS_PSI_BOUND is set
    """
    raw = os.environ.get(PSI_BOUND_ENV)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise ConfigError(f"{PSI_BOUND_ENV} must be an integer, got {raw!r}") from e
    if value < 0:
        raise ConfigError(f"{PSI_BOUND_ENV} must be non-negative, got {value}")
    return value
