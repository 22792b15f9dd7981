"""
Case stages of verify-paper: the s = 3 table and the contradiction certificates.
"""

import logging
from fractions import Fraction

import pandas as pd

from ..classifier_enum import certificate_frame, enumerate_baskets, verify_2E_contradiction, verify_nE_cases
from ..config import DEFAULT_RMAX, MAX_S_TARGET, TABLE_RMAX
from ..core_arith import format_rational
from ..reid_rr import Basket
from .stage_results import CheckTally

logger = logging.getLogger(__name__)

# Bounded rows of the s = 3 case analysis with their aE^3
S3_BOUNDED_ROWS = (
    (((7, 3),), Fraction(2, 7)),
    (((8, 3),), Fraction(1, 8)),
    (((2, 1), (5, 2)), Fraction(3, 10)),
    (((3, 1), (5, 2)), Fraction(2, 15)),
    (((4, 1), (5, 2)), Fraction(1, 20)),
    (((2, 1), (7, 2)), Fraction(1, 14)),
    (((2, 1), (3, 1), (3, 1)), Fraction(1, 6)),
    (((2, 1), (3, 1), (4, 1)), Fraction(1, 12)),
    (((2, 1), (3, 1), (5, 1)), Fraction(1, 30)),
)


def expected_s3_table(r_max):
    """Expected {basket: aE^3} for s = 3, with the (2,2,r3) family cut at r_max."""
    table = {Basket.of(pairs): ae3 for pairs, ae3 in S3_BOUNDED_ROWS}
    for r3 in range(2, r_max + 1):
        table[Basket.of([(2, 1), (2, 1), (r3, 1)])] = Fraction(2, 2 * r3)
    return table


def check_table_reproduction(r_max=TABLE_RMAX, tally=None, workers=1):
    """enumerate(3, r_max) must list exactly the case tables, no extra rows."""
    tally = tally or CheckTally()
    report = enumerate_baskets(MAX_S_TARGET, r_max, workers=workers)
    found = {row.basket: row.aE3 for row in report.rows}
    expected = expected_s3_table(r_max)

    for basket, ae3 in expected.items():
        tally.check("table row present", basket in found, format_rational(ae3), None, basket=basket)
        if basket in found:
            tally.check("table aE3", found[basket] == ae3, format_rational(ae3), format_rational(found[basket]),
                        basket=basket)
    for basket in found:
        tally.check("no extra table rows", basket in expected, None, format_rational(found[basket]), basket=basket)

    family = [str(note.rest) for note in report.family_notes]
    tally.check("(2,2,r3) flagged as family", family == ["{(2,1),(2,1)}"], ["{(2,1),(2,1)}"], family, r_max=r_max)
    return tally


def _record_certificate(tally, certificate):
    for entry in certificate.entries:
        tally.check(f"{certificate.name}: {entry.check}", entry.passed, entry.expected, entry.value,
                    basket=entry.basket)


def run_case_certificates(table_rmax=TABLE_RMAX, rmax=DEFAULT_RMAX, workers=1):
    """Returns (summary frame, violations frame, certificates frame)."""
    tally = CheckTally()

    logger.info("** Running table reproduction for s = 3, r <= %d...", table_rmax)
    check_table_reproduction(table_rmax, tally, workers=workers)

    logger.info("** Running 2E contradiction, r <= %d...", rmax)
    two_e = verify_2E_contradiction(rmax)
    _record_certificate(tally, two_e)

    logger.info("** Running nE case certificates, r <= %d...", rmax)
    n_e = verify_nE_cases(rmax)
    _record_certificate(tally, n_e)

    certificates = pd.concat([certificate_frame(two_e), certificate_frame(n_e)], ignore_index=True)
    return tally.summary_frame(), tally.violations_frame(), certificates
