"""
Identity stages of verify-paper: every closed formula against its
independent oracle over the acceptance ranges.
"""

import logging

from ..config import COLENGTH_MAX_L, PAIR_SUM_MAX_R, TERMINAL_MAX_WEIGHT, TOWER_MAX_N, WBU_MAX_B
from ..core_arith import gcd, smallest_residue
from ..monomial_ideals import (
    WeightTriple,
    colength_bruteforce,
    colength_closed_form,
    graded_piece_dims,
    restate_conditions,
)
from ..reid_rr import (
    B_i,
    Basket,
    QuotientSingularity,
    aE3_from_basket,
    colength_via_C,
    contribution,
    dim_quotient_D,
    graded_dim_via_B,
    max_discrepancy,
    min_term_identity,
    partial_sum_d,
    sumchi_via_B1,
)
from ..wbu_toric import (
    chi_quotient_reduced,
    contribution_sum,
    dim_quotient_monomial,
    terminal_by_charts,
    terminal_by_theorem,
    tower_profile,
    wbu_profile,
)
from .stage_results import CheckTally

logger = logging.getLogger(__name__)


def _units(r):
    return [b for b in range(1, r) if gcd(b, r) == 1]


def check_colength_oracle(max_l=COLENGTH_MAX_L, tally=None):
    """Closed-form colength against the monomial count for 1 <= m <= l <= max_l."""
    tally = tally or CheckTally()
    for l in range(1, max_l + 1):
        for m in range(1, l + 1):
            closed = colength_closed_form(l, m)
            brute = colength_bruteforce(WeightTriple(1, min(l, m), l), l)
            tally.check("colength closed form = oracle", closed == brute, brute, closed, l=l, m=m)
        tally.check("colength(l, 1) = l(l+1)/2", colength_closed_form(l, 1) == l * (l + 1) // 2,
                    l * (l + 1) // 2, colength_closed_form(l, 1), l=l)
        tally.check("colength(m, m) = m", colength_closed_form(l, l) == l, l, colength_closed_form(l, l), m=l)
    return tally


def check_pair_sums(max_r=PAIR_SUM_MAX_R, tally=None):
    """c_Q(ieE) + c_Q(-ieE) = -iv(r - iv)/2r with v = eb, over all units b and e."""
    tally = tally or CheckTally()
    for r in range(2, max_r + 1):
        units = _units(r)
        for b in units:
            q = QuotientSingularity(r, b)
            table = [contribution(q, k) for k in range(r)]
            for e in units:
                single = Basket.of([(r, smallest_residue(e * b, r))])
                for i in range(r):
                    lhs = table[smallest_residue(i * e, r)] + table[smallest_residue(-i * e, r)]
                    rhs = -B_i(single, i)
                    tally.check("pair-sum identity", lhs == rhs, rhs, lhs, r=r, b=b, e=e, i=i)
    return tally


def check_periodicity(max_r=PAIR_SUM_MAX_R, tally=None):
    """c_Q(i) depends on i mod r only and vanishes at multiples of r."""
    tally = tally or CheckTally()
    for r in range(2, max_r + 1):
        for b in _units(r):
            q = QuotientSingularity(r, b)
            for multiple in (-r, 0, r, 2 * r):
                value = contribution(q, multiple)
                tally.check("contribution vanishes at multiples of r", value == 0, 0, value, r=r, b=b, i=multiple)
            for i in range(1, r):
                value = contribution(q, i)
                shifted = (contribution(q, i + r), contribution(q, i - r))
                tally.check("contribution periodic mod r", shifted == (value, value), value, shifted, r=r, b=b, i=i)
    return tally


def check_min_terms(max_r=PAIR_SUM_MAX_R, tally=None):
    """Entry-wise form of (C): the B-term difference equals -1/2 of the minimum."""
    tally = tally or CheckTally()
    for r in range(2, max_r + 1):
        for v in _units(r):
            entry = Basket.of([(r, v)]).entries[0]
            for i in range(1, r + 2):
                lhs, rhs = min_term_identity(entry, i)
                tally.check("min-term identity", lhs == rhs, rhs, lhs, r=r, v=v, i=i)
    return tally


def _check_profile(tally, a, b):
    profile = wbu_profile(a, b)
    basket = profile.basket
    disc = profile.discrepancy
    w = profile.weights
    ops = {"a": a, "b": b}

    ae3 = aE3_from_basket(basket)
    tally.check("(B): aE3 from basket = a E^3", ae3 == disc * profile.E3, disc * profile.E3, ae3, **ops)
    for i in range(1, disc + 1):
        via_c = colength_via_C(basket, i)
        brute = colength_bruteforce(w, i)
        tally.check("(C): colength via basket = oracle", via_c == brute, brute, via_c, i=i, **ops)
        partial = partial_sum_d(basket, ae3, i)
        tally.check("1 + partial sum of d = colength", 1 + partial == via_c, via_c, 1 + partial, i=i, **ops)
        tally.check("partial sum with aE3 eliminated", sumchi_via_B1(basket, i) == partial,
                    partial, sumchi_via_B1(basket, i), i=i, **ops)
    dim_d = dim_quotient_D(basket)
    monomial = dim_quotient_monomial(profile)
    tally.check("(D): dim f_*O(-2E)/m^2", dim_d == monomial, monomial, dim_d, **ops)
    max_a = max_discrepancy(basket)
    tally.check("max a from (A) = a + b", max_a == disc, disc, max_a, **ops)

    condition_1, condition_2 = restate_conditions(w)
    tally.check("ideal conditions 1 and 2", condition_1 and condition_2, (True, True), (condition_1, condition_2), **ops)

    graded = graded_piece_dims(w, disc)
    for j in range(disc):
        via_b = graded_dim_via_B(basket, ae3, j)
        tally.check("graded piece via B = monomial count", via_b == graded[j], graded[j], via_b, j=j, **ops)
        difference = chi_quotient_reduced(profile, -j) - chi_quotient_reduced(profile, j + 1)
        tally.check("chi(Q_-j) - chi(Q_j+1) = graded piece", difference == via_b, via_b, difference, j=j, **ops)

    base = chi_quotient_reduced(profile, 1)
    constant = all(chi_quotient_reduced(profile, i) == base for i in range(1, disc + 1))
    tally.check("chi(Q_i) constant for 1 <= i <= a", constant, True, constant, **ops)

    r = basket.index
    for i in range(r):
        pair = -(contribution_sum(profile, i) + contribution_sum(profile, -i))
        tally.check("B_i = -(A_i + A_-i) on the charts", pair == B_i(basket, i), B_i(basket, i), pair, i=i, **ops)
        step = chi_quotient_reduced(profile, i) - chi_quotient_reduced(profile, r + i)
        expected = r * (disc + 1 - r - 2 * i) * profile.E3 / 2
        tally.check("chi(Q_i) - chi(Q_r+i)", step == expected, expected, step, i=i, **ops)
    tally.check("A_r = 0", contribution_sum(profile, r) == 0, 0, contribution_sum(profile, r), **ops)


def check_wbu_closure(max_b=WBU_MAX_B, tally=None):
    """Every coprime (1, a, b) profile with a <= b <= max_b against the monomial oracle."""
    tally = tally or CheckTally()
    for b in range(1, max_b + 1):
        for a in range(1, b + 1):
            if gcd(a, b) == 1:
                _check_profile(tally, a, b)
    return tally


def check_terminality(max_weight=TERMINAL_MAX_WEIGHT, tally=None):
    """The r = 1, gcd(a, b) = 1 criterion against the chart-wise Reid-Tai oracle on sorted triples."""
    tally = tally or CheckTally()
    for w1 in range(1, max_weight + 1):
        for w2 in range(w1, max_weight + 1):
            for w3 in range(w2, max_weight + 1):
                w = WeightTriple(w1, w2, w3)
                by_theorem = terminal_by_theorem(w)
                by_charts = terminal_by_charts(w)
                tally.check("terminal criterion = Reid-Tai oracle", by_theorem == by_charts,
                            by_charts, by_theorem, weights=w.as_tuple())
    return tally


def check_towers(max_n=TOWER_MAX_N, tally=None):
    tally = tally or CheckTally()
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            if gcd(m, n) != 1:
                continue
            tower = tower_profile(m, n)
            tally.check("tower discrepancy = m + n", tower.discrepancy == m + n, m + n, tower.discrepancy, m=m, n=n)
            tally.check("tower n <= a - 1", n <= tower.discrepancy - 1, tower.discrepancy - 1, n, m=m, n=n)
            points = sum(1 for step in tower.steps if step.center == "point")
            tally.check("tower point centers = m", points == m, m, points, m=m, n=n)
    return tally


IDENTITY_STAGES = (
    ("colength oracle", check_colength_oracle),
    ("pair sums", check_pair_sums),
    ("periodicity", check_periodicity),
    ("min terms", check_min_terms),
    ("weighted blow-up closure", check_wbu_closure),
    ("terminality", check_terminality),
    ("towers", check_towers),
)


def run_identity_checks():
    """Run every identity stage; returns (summary frame, violations frame)."""
    tally = CheckTally()
    for label, stage in IDENTITY_STAGES:
        logger.info("** Running %s...", label)
        stage(tally=tally)
    return tally.summary_frame(), tally.violations_frame()
