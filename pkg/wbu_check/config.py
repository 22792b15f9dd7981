"""
Module-level constants for the verifier and the one logging setup used by
every entry point.
"""

import logging
import os

# Log record format shared by the CLI and the verification pipeline
LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

# Signed 128-bit window for every integer and every numerator/denominator
INT_WIDTH_BITS = 128
INT_LIMIT = 2 ** (INT_WIDTH_BITS - 1)

# Largest dimension of m_P / m_P^2 for a smooth 3-fold point
MAX_S_TARGET = 3

# Lower bound on the discrepancy when f_*O_Y(-2E) = m_P
MIN_DISCREPANCY_2E = 6
# Bound proved for every s = 3 basket
MAX_DISCREPANCY_2E = 3
# Bound proved for baskets {(r, 2)}
MAX_DISCREPANCY_SUBCASE_1 = 4

# -----------------------
# Acceptance ranges
# -----------------------
COLENGTH_MAX_L = 40
PAIR_SUM_MAX_R = 25
WBU_MAX_B = 12
TERMINAL_MAX_WEIGHT = 10
TOWER_MAX_N = 12
TABLE_RMAX = 8
DEFAULT_RMAX = 12

# Output files written by verify-paper --report-dir
CERTIFICATES_FILE = "certificates.csv"
VIOLATIONS_FILE = "violations.csv"


def setup_logging(level=logging.WARNING, log_file=None):
    """Configure root logging: stderr always, a log file when asked."""
    handlers = [logging.StreamHandler()]
    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )
