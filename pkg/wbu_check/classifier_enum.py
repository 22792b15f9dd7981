"""
Exhaustive basket enumeration and the contradiction certificates.

A basket with sum_Q min(v, r - v) = s and B_1 < 1 is a candidate for a
contraction with dim f_*O_Y(-2E)/m_P^2 = s. The enumeration lists them all
up to an index bound, and the certificate functions check every bound and
equality band the classification argument relies on.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial

import pandas as pd

from .config import MAX_DISCREPANCY_2E, MAX_DISCREPANCY_SUBCASE_1, MAX_S_TARGET, MIN_DISCREPANCY_2E, TABLE_RMAX
from .core_arith import format_rational, gcd
from .errors import DomainError
from .monomial_ideals import claim_r1_colength, colength_closed_form
from .reid_rr import B_i, Basket, BasketEntry, aE3_from_basket, colength_via_C, max_discrepancy
from .wbu_toric import realizing_pair

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumerationRow:
    basket: Basket
    aE3: Fraction
    index: int
    max_a: int = None
    realized_by: tuple = None
    family: str = None


@dataclass(frozen=True)
class FamilyNote:
    """All entries fixed but one (r, v) whose index r is unbounded."""
    rest: Basket
    v: int
    r_max: int

    def __str__(self):
        free = ",".join([str(entry) for entry in self.rest] + [f"(r,{self.v})"])
        return f"{{{free}}} unbounded in r, truncated at r <= {self.r_max}"


@dataclass
class EnumerationReport:
    s_target: int
    r_max: int
    rows: list = field(default_factory=list)
    family_notes: list = field(default_factory=list)

    def baskets(self):
        return [row.basket for row in self.rows]


@dataclass(frozen=True)
class CertificateEntry:
    case: str
    basket: str
    check: str
    value: object
    expected: object
    passed: bool


@dataclass
class Certificate:
    name: str
    r_max: int
    entries: list = field(default_factory=list)

    def record(self, case, basket, check, value, expected, passed):
        self.entries.append(CertificateEntry(case, str(basket), check, value, expected, bool(passed)))
        if not passed:
            logger.warning("%s: %s failed for %s (value %s, expected %s)", self.name, check, basket, value, expected)

    @property
    def ok(self):
        return all(entry.passed for entry in self.entries)

    def failures(self):
        return [entry for entry in self.entries if not entry.passed]


def candidate_entries(s_target, r_max):
    """Canonical entries (r, v), v <= r/2 coprime to r, small enough to fit in s_target."""
    entries = []
    for r in range(2, r_max + 1):
        for v in range(1, min(r // 2, s_target) + 1):
            if gcd(v, r) == 1:
                entries.append(BasketEntry(r, v))
    return entries


def _extend(entries, start, remaining, chosen, b1):
    """Multisets drawn from entries[start:] with v summing to remaining and B_1 < 1."""
    if remaining == 0:
        yield tuple(chosen)
        return
    for k in range(start, len(entries)):
        entry = entries[k]
        if entry.v > remaining:
            continue
        term = B_i(Basket((entry,)), 1)
        if b1 + term >= 1:
            continue
        chosen.append(entry)
        yield from _extend(entries, k, remaining - entry.v, chosen, b1 + term)
        chosen.pop()


def _baskets_starting_at(args):
    """Worker: every basket whose smallest entry is entries[first]."""
    s_target, r_max, first = args
    entries = candidate_entries(s_target, r_max)
    head = entries[first]
    head_b1 = B_i(Basket((head,)), 1)
    if head.v > s_target or head_b1 >= 1:
        return []
    return [
        tuple(e.as_pair() for e in found)
        for found in _extend(entries, first, s_target - head.v, [head], head_b1)
    ]


def _family_of(basket, r_max):
    """The family this basket belongs to, if its largest-index entry can grow without bound."""
    if not basket.entries:
        return None
    top = basket.entries[-1]
    for position in range(len(basket.entries) - 1, -1, -1):
        entry = basket.entries[position]
        if entry.r != top.r:
            break
        rest = Basket(basket.entries[:position] + basket.entries[position + 1:])
        # v(r - v)/2r increases to v/2 as r grows
        if B_i(rest, 1) + Fraction(entry.v, 2) <= 1:
            return FamilyNote(rest, entry.v, r_max)
    return None


def _sort_key(basket):
    return (len(basket), basket.canonical_entries())


def enumerate_baskets(s_target, r_max, workers=1):
    """Every basket with entry indices <= r_max, sum of v equal to s_target and B_1 < 1."""
    if not 0 <= s_target <= MAX_S_TARGET:
        raise DomainError(f"s_target must lie in [0, {MAX_S_TARGET}], got {s_target}")
    if r_max < 2:
        raise DomainError(f"r_max must be at least 2, got {r_max}")

    if s_target == 0:
        found = [()]
    else:
        jobs = [(s_target, r_max, first) for first in range(len(candidate_entries(s_target, r_max)))]
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                chunks = list(pool.map(_baskets_starting_at, jobs))
        else:
            chunks = [_baskets_starting_at(job) for job in jobs]
        found = [pairs for chunk in chunks for pairs in chunk]

    baskets = sorted({Basket.of(pairs) for pairs in found}, key=_sort_key)
    report = EnumerationReport(s_target, r_max)
    notes = {}
    for basket in baskets:
        max_a = max_discrepancy(basket)
        note = _family_of(basket, r_max)
        if note is not None:
            notes.setdefault((note.rest, note.v), note)
        report.rows.append(EnumerationRow(
            basket=basket,
            aE3=aE3_from_basket(basket),
            index=basket.index,
            max_a=max_a,
            realized_by=realizing_pair(basket, max_a) if max_a else None,
            family=str(note) if note else None,
        ))
    report.family_notes = list(notes.values())
    logger.info("Enumerated %d baskets for s = %d, r <= %d", len(report.rows), s_target, r_max)
    return report


def verify_2E_contradiction(r_max=TABLE_RMAX):
    """Every s = 3 basket allows only a <= 3, against a >= 6 when f_*O_Y(-2E) = m_P."""
    if r_max < TABLE_RMAX:
        raise DomainError(f"r_max must be at least {TABLE_RMAX} to cover the bounded cases, got {r_max}")
    certificate = Certificate("2E", r_max)
    for row in enumerate_baskets(MAX_S_TARGET, r_max).rows:
        if row.max_a is None:
            certificate.record("s=3", row.basket, "no admissible a", None, None, True)
            continue
        certificate.record(
            "s=3", row.basket, "max a <= 3", row.max_a, MAX_DISCREPANCY_2E,
            row.max_a <= MAX_DISCREPANCY_2E and row.max_a < MIN_DISCREPANCY_2E,
        )
    return certificate


def _triangle(i):
    return i * (i + 1) // 2


def _first_strict_index(lower, actual, stop):
    for i in range(1, stop + 1):
        if actual(i) != lower(i):
            return i
    return None


def _check_single_point(certificate, basket):
    """Baskets {(r, 1)}: a <= r + 1 and colength i(i+1)/2 exactly while i <= r."""
    r = basket.entries[0].r
    max_a = max_discrepancy(basket)
    certificate.record("s=1", basket, "max a = r + 1", max_a, r + 1, max_a == r + 1)

    colength = partial(colength_via_C, basket)
    band_ok = all(colength(i) == _triangle(i) for i in range(1, r + 1))
    certificate.record("s=1", basket, "colength = i(i+1)/2 for i <= r", band_ok, True, band_ok)
    above = colength(r + 1)
    certificate.record("s=1", basket, "colength > i(i+1)/2 at i = r + 1", above, _triangle(r + 1), above > _triangle(r + 1))

    # m = 1 here, so the tower needs a >= m + l with l the first strict index
    l = _first_strict_index(_triangle, colength, r + 1)
    certificate.record("s=1", basket, "first strict index = r + 1", l, r + 1, l == r + 1)
    certificate.record("s=1", basket, "1 + l > max a", 1 + (l or 0), max_a, l is not None and 1 + l > max_a)
    certificate.record("s=1", basket, "realized by (1, r)", realizing_pair(basket, max_a), (1, r),
                       realizing_pair(basket, max_a) == (1, r))


def _check_two_points(certificate, basket):
    """Baskets {(r1, 1), (r2, 1)}: a <= r1 + r2 and the two equality bands."""
    r1, r2 = basket.entries[0].r, basket.entries[1].r
    bound = r1 + r2
    max_a = max_discrepancy(basket)
    certificate.record("s=2", basket, "max a <= r1 + r2", max_a, bound, max_a is None or max_a <= bound)

    colength = partial(colength_via_C, basket)
    first_band = all((colength(i) == i) == (i <= r1) for i in range(1, bound + 2))
    certificate.record("s=2", basket, "colength = i iff i <= r1", first_band, True, first_band)
    second_band = all(
        (colength(i) == colength_closed_form(i, r1)) == (i <= r2) for i in range(1, bound + 2)
    )
    certificate.record("s=2", basket, "colength = closed form(i, r1) iff i <= r2", second_band, True, second_band)

    pinned = [
        m for m in range(1, bound)
        if colength(m) <= colength_closed_form(m, m) and colength(m + 1) >= claim_r1_colength(m)
    ]
    certificate.record("s=2", basket, "unique m pinned to r1", pinned, [r1], pinned == [r1])

    l = _first_strict_index(partial(colength_closed_form, m=r1), colength, bound + 1)
    certificate.record("s=2", basket, "first strict index = r2 + 1", l, r2 + 1, l == r2 + 1)
    certificate.record("s=2", basket, "r1 + l > max a", r1 + (l or 0), max_a,
                       l is not None and (max_a is None or r1 + l > max_a))

    if max_a == bound:
        pair = realizing_pair(basket, max_a)
        certificate.record("s=2", basket, "realized by (r1, r2)", pair, (r1, r2), pair == (r1, r2))


def _check_double_weight(certificate, basket):
    """Baskets {(r, 2)}: aE^3 = 4/r, so a <= 4."""
    r = basket.entries[0].r
    ae3 = aE3_from_basket(basket)
    certificate.record("s=2 (r,2)", basket, "aE3 = 4/r", format_rational(ae3), format_rational(Fraction(4, r)),
                       ae3 == Fraction(4, r))
    max_a = max_discrepancy(basket)
    certificate.record("s=2 (r,2)", basket, "max a <= 4", max_a, MAX_DISCREPANCY_SUBCASE_1,
                       max_a is None or max_a <= MAX_DISCREPANCY_SUBCASE_1)


def verify_nE_cases(r_max=TABLE_RMAX):
    """Bounds and equality bands for every basket with s = 1 or s = 2."""
    if r_max < 2:
        raise DomainError(f"r_max must be at least 2, got {r_max}")
    certificate = Certificate("nE", r_max)
    for row in enumerate_baskets(1, r_max).rows:
        _check_single_point(certificate, row.basket)
    for row in enumerate_baskets(2, r_max).rows:
        if len(row.basket) == 2:
            _check_two_points(certificate, row.basket)
        else:
            _check_double_weight(certificate, row.basket)
    return certificate


def report_frame(report):
    return pd.DataFrame(
        [
            {
                "basket": str(row.basket),
                "aE3": format_rational(row.aE3),
                "r": row.index,
                "max_a": row.max_a if row.max_a is not None else "none",
                "realized_by": f"(1,{row.realized_by[0]},{row.realized_by[1]})" if row.realized_by else "",
                "family": row.family or "",
            }
            for row in report.rows
        ],
        columns=["basket", "aE3", "r", "max_a", "realized_by", "family"],
    )


def certificate_frame(certificate):
    frame = pd.DataFrame(
        [
            {
                "case": entry.case,
                "basket": entry.basket,
                "check": entry.check,
                "value": str(entry.value),
                "expected": str(entry.expected),
                "passed": entry.passed,
            }
            for entry in certificate.entries
        ],
        columns=["case", "basket", "check", "value", "expected", "passed"],
    )
    frame.insert(0, "certificate", certificate.name)
    return frame
