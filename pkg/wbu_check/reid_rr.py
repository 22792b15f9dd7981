"""
Singular Riemann-Roch contributions of terminal cyclic quotient points and
the identities they imply for a divisorial contraction to a smooth point.

A basket is a multiset of fictitious points (r_Q, v_Q). Everything here is
exact; the only inputs are integers and Fractions.

    B_i            = sum_Q  iv(r - iv) / 2r           (bars: residues mod r_Q)
    (A)  r E^3 is a positive integer
    (B)  1 = aE^3 / 2 + B_1
    (C)  colength of f_*O_Y(-iE) = i^2 - 1/2 sum_Q min_j {(1+j)j r + i(i-1-2j) v}
         valid for 1 <= i <= a only
    (D)  sum_Q min(v, r - v) = dim f_*O_Y(-2E) / m_P^2
"""

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .core_arith import checked, gcd, lcm_all, smallest_residue
from .errors import DomainError, InfeasibleBasketError

logger = logging.getLogger(__name__)

_ENTRY_PATTERN = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")
_PAIR = r"\(\s*-?\d+\s*,\s*-?\d+\s*\)"
_BASKET_PATTERN = re.compile(rf"\s*{_PAIR}(?:\s*,\s*{_PAIR})*\s*")


@dataclass(frozen=True)
class QuotientSingularity:
    """Terminal quotient point of type 1/r(1, -1, b)."""
    r: int
    b: int

    def __post_init__(self):
        if self.r < 2:
            raise DomainError(f"index must be at least 2, got {self.r}")
        b = smallest_residue(self.b, self.r)
        if gcd(b, self.r) != 1:
            raise DomainError(f"b = {self.b} is not coprime to r = {self.r}")
        object.__setattr__(self, "b", b)

    def type_string(self):
        return f"1/{self.r}(1,-1,{self.b})"


@dataclass(frozen=True, order=True)
class BasketEntry:
    """Fictitious point (r, v); v is stored as min(v, r - v), the input kept for display."""
    r: int
    v: int
    given_v: int = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.r < 2:
            raise DomainError(f"index must be at least 2, got {self.r}")
        v = smallest_residue(self.v, self.r)
        if v == 0 or gcd(v, self.r) != 1:
            raise DomainError(f"v = {self.v} is not coprime to r = {self.r}")
        object.__setattr__(self, "given_v", v if self.given_v is None else self.given_v)
        object.__setattr__(self, "v", min(v, self.r - v))

    def as_pair(self):
        return (self.r, self.v)

    def __str__(self):
        return f"({self.r},{self.v})"


@dataclass(frozen=True)
class Basket:
    entries: tuple = ()

    @classmethod
    def of(cls, pairs):
        entries = []
        for item in pairs:
            entries.append(item if isinstance(item, BasketEntry) else BasketEntry(*item))
        return cls(tuple(sorted(entries)))

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    @property
    def index(self):
        """Global Gorenstein index: lcm of the r_Q, 1 when empty."""
        return lcm_all(entry.r for entry in self.entries)

    def canonical_entries(self):
        return [entry.as_pair() for entry in self.entries]

    def display_entries(self):
        return [(entry.r, entry.given_v) for entry in self.entries]

    def __str__(self):
        return "{" + ",".join(str(entry) for entry in self.entries) + "}"


def parse_basket(text):
    """Parse "(r1,v1),(r2,v2),..."; "" and "{}" are the empty basket."""
    cleaned = str(text).strip()
    if cleaned.startswith(("{", "[")) and cleaned.endswith(("}", "]")):
        cleaned = cleaned[1:-1].strip()
    if not cleaned:
        return Basket()
    if not _BASKET_PATTERN.fullmatch(cleaned):
        raise DomainError(f"malformed basket {text!r}")
    return Basket.of([(int(r), int(v)) for r, v in _ENTRY_PATTERN.findall(cleaned)])


def _pair_term(residue, r):
    return Fraction(residue * (r - residue), 2 * r)


def contribution(q, i_bar):
    """c_Q(D) for O(D) = O(i K) near Q, with i taken mod r."""
    r = q.r
    i = smallest_residue(i_bar, r)
    if i == 0:
        return Fraction(0)
    total = -i * Fraction(r * r - 1, 12 * r)
    for j in range(1, i):
        total += _pair_term(smallest_residue(j * q.b, r), r)
    return checked(total)


def B_i(basket, i):
    """sum over the basket of iv(r - iv)/2r with residues mod r."""
    total = Fraction(0)
    for entry in basket:
        total += _pair_term(smallest_residue(i * entry.v, entry.r), entry.r)
    return checked(total)


def pair_sum(q, e, i):
    """c_Q(ieE) + c_Q(-ieE) and the (Bi) value -iv(r - iv)/2r with v = eb mod r."""
    lhs = contribution(q, i * e) + contribution(q, -i * e)
    v = smallest_residue(e * q.b, q.r)
    rhs = -_pair_term(smallest_residue(i * v, q.r), q.r)
    return lhs, rhs


def aE3_from_basket(basket):
    """aE^3 = 2(1 - B_1); only defined when B_1 < 1."""
    b1 = B_i(basket, 1)
    if b1 >= 1:
        raise InfeasibleBasketError(str(basket), b1)
    return checked(2 * (1 - b1))


def check_A(basket, a):
    """True iff r E^3 is a positive integer, E^3 = aE^3 / a."""
    if a < 2:
        raise DomainError(f"discrepancy must be at least 2, got {a}")
    r_e3 = basket.index * aE3_from_basket(basket) / a
    return r_e3 > 0 and r_e3.denominator == 1


def max_discrepancy(basket):
    """Largest a >= 2 satisfying (A), or None when no such a exists."""
    ae3 = aE3_from_basket(basket)
    bound = basket.index * ae3.numerator
    for a in range(bound, 1, -1):
        if check_A(basket, a):
            return a
    logger.debug("basket %s admits no discrepancy a >= 2", basket)
    return None


def _min_term(entry, i):
    r, v = entry.r, entry.v
    return min((1 + j) * j * r + i * (i - 1 - 2 * j) * v for j in range(i))


def colength_via_C(basket, i):
    """
    Right-hand side of (C). Meaningful only for 1 <= i <= a; the range is
    the caller's to enforce because a is not a function of the basket.
    """
    if i < 1:
        raise DomainError(f"i must be positive, got {i}")
    # each min term is even: (1+j)j and i(i-1) are even
    return checked(i * i - sum(_min_term(entry, i) for entry in basket) // 2)


def dim_quotient_D(basket):
    return sum(entry.v for entry in basket)


def partial_sum_d(basket, aE3, i):
    """sum_{1 <= j < i} d(-j) = (i^2 - 1) aE^3 / 2 + B_i - B_1."""
    if i < 1:
        raise DomainError(f"i must be positive, got {i}")
    return checked(Fraction(i * i - 1, 2) * aE3 + B_i(basket, i) - B_i(basket, 1))


def sumchi_via_B1(basket, i):
    """Same partial sum with aE^3 eliminated through (B): (i^2 - 1) + B_i - i^2 B_1."""
    return checked((i * i - 1) + B_i(basket, i) - i * i * B_i(basket, 1))


def graded_dim_via_B(basket, aE3, j):
    """d(-j) = (j + 1/2) aE^3 + B_{j+1} - B_j."""
    return checked((j + Fraction(1, 2)) * aE3 + B_i(basket, j + 1) - B_i(basket, j))


def min_term_identity(entry, i):
    """Both sides of  iv(r-iv)/2r - i^2 v(r-v)/2r = -1/2 min_j {...}  for one entry."""
    lhs = _pair_term(smallest_residue(i * entry.v, entry.r), entry.r) - i * i * _pair_term(entry.v, entry.r)
    rhs = Fraction(-_min_term(entry, i), 2)
    return lhs, rhs
