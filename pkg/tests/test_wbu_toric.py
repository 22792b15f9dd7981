from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wbu_check.config import TERMINAL_MAX_WEIGHT, TOWER_MAX_N, WBU_MAX_B
from wbu_check.errors import DomainError
from wbu_check.monomial_ideals import WeightTriple, colength_bruteforce, graded_piece_dims, restate_conditions
from wbu_check.reid_rr import (
    B_i,
    Basket,
    aE3_from_basket,
    colength_via_C,
    dim_quotient_D,
    graded_dim_via_B,
    max_discrepancy,
)
from wbu_check.wbu_toric import (
    chart_singularities,
    chi_quotient_reduced,
    contribution_sum,
    dim_quotient_monomial,
    realizing_pair,
    reid_tai_terminal,
    terminal_by_charts,
    terminal_by_theorem,
    tower_profile,
    wbu_profile,
)


@st.composite
def coprime_pairs(draw, max_b=WBU_MAX_B):
    b = draw(st.integers(1, max_b))
    a = draw(st.integers(1, b).filter(lambda a: gcd(a, b) == 1))
    return a, b


def test_ordinary_blow_up():
    profile = wbu_profile(1, 1)
    assert profile.discrepancy == 2
    assert profile.E3 == 1
    assert profile.basket == Basket()
    assert profile.e == 1


def test_profile_with_one_chart_point():
    for n in range(2, 10):
        profile = wbu_profile(1, n)
        assert profile.discrepancy == n + 1
        assert profile.E3 == Fraction(1, n)
        assert profile.basket.canonical_entries() == [(n, 1)]


def test_profile_2_3():
    profile = wbu_profile(2, 3)
    assert profile.discrepancy == 5
    assert profile.E3 == Fraction(1, 6)
    assert profile.basket.canonical_entries() == [(2, 1), (3, 1)]
    assert profile.e == 5
    assert [point.singularity.type_string() for point in profile.charts] == ["1/2(1,-1,1)", "1/3(1,-1,2)"]
    assert Fraction(5, 6) / 2 + Fraction(7, 12) == 1


@pytest.mark.parametrize("a, b", [(2, 4), (0, 3), (3, 2), (6, 9)])
def test_profile_rejects_bad_weights(a, b):
    with pytest.raises(DomainError):
        wbu_profile(a, b)


def test_terminal_by_theorem():
    assert terminal_by_theorem(WeightTriple(1, 2, 3))
    assert not terminal_by_theorem(WeightTriple(1, 2, 4))
    assert not terminal_by_theorem(WeightTriple(2, 3, 5))
    assert terminal_by_theorem(WeightTriple(3, 1, 2))


def test_reid_tai_terminal():
    assert reid_tai_terminal(2, (1, 1, 1))
    assert not reid_tai_terminal(3, (1, 1, 1))
    assert reid_tai_terminal(5, (1, 4, 2))
    with pytest.raises(DomainError):
        reid_tai_terminal(1, (1, 1, 1))


def test_chart_singularities():
    charts = chart_singularities(WeightTriple(1, 2, 3))
    assert [(c.chart, c.index, c.weights) for c in charts] == [
        ("y-chart", 2, (1, 1, 1)),
        ("z-chart", 3, (1, 2, 2)),
    ]
    assert chart_singularities(WeightTriple(1, 1, 1)) == []


def test_tower_profiles():
    tower = tower_profile(1, 1)
    assert len(tower.steps) == 1
    assert tower.discrepancy == 2

    tower = tower_profile(1, 2)
    assert [step.center for step in tower.steps] == ["point", "curve"]
    assert tower.discrepancy == 3

    tower = tower_profile(2, 3)
    assert [step.center for step in tower.steps] == ["point", "point", "curve"]
    assert [step.weights for step in tower.steps] == [(1, 1, 1), (1, 2, 2), (1, 2, 3)]
    assert [step.discrepancy for step in tower.steps] == [2, 4, 5]
    assert all(step.coefficient == 1 for step in tower.steps)
    assert tower.discrepancy == 5


@pytest.mark.parametrize("m, n", [(2, 4), (3, 2), (0, 1)])
def test_tower_rejects_bad_input(m, n):
    with pytest.raises(DomainError):
        tower_profile(m, n)


def test_realizing_pair():
    assert realizing_pair(Basket.of([(2, 1), (3, 1)]), 5) == (2, 3)
    assert realizing_pair(Basket.of([(4, 1)]), 5) == (1, 4)
    assert realizing_pair(Basket(), 2) == (1, 1)
    assert realizing_pair(Basket.of([(7, 3)]), 2) is None


def test_chi_quotient_for_1_1_2():
    profile = wbu_profile(1, 2)
    assert [chi_quotient_reduced(profile, i) for i in (1, 2, 3)] == [Fraction(-1, 24)] * 3
    assert chi_quotient_reduced(profile, 0) - chi_quotient_reduced(profile, 1) == 1


def test_dim_quotient_trichotomy():
    assert dim_quotient_monomial(wbu_profile(1, 1)) == 0
    assert dim_quotient_monomial(wbu_profile(1, 4)) == 1
    assert dim_quotient_monomial(wbu_profile(2, 5)) == 2


@pytest.mark.property_based
@given(coprime_pairs())
@settings(max_examples=40, deadline=None)
def test_profile_consistency(pair):
    a, b = pair
    profile = wbu_profile(a, b)
    basket = profile.basket
    assert aE3_from_basket(basket) == profile.discrepancy * profile.E3
    assert max_discrepancy(basket) == a + b
    assert dim_quotient_D(basket) == dim_quotient_monomial(profile)
    assert all(entry.v == 1 for entry in basket)
    assert restate_conditions(profile.weights) == (True, True)
    for i in range(1, a + b + 1):
        assert colength_via_C(basket, i) == colength_bruteforce(profile.weights, i)


@pytest.mark.property_based
@given(coprime_pairs(max_b=8))
@settings(max_examples=30, deadline=None)
def test_chart_contributions_match_basket(pair):
    profile = wbu_profile(*pair)
    basket = profile.basket
    r = basket.index
    for i in range(-r, r + 1):
        assert -(contribution_sum(profile, i) + contribution_sum(profile, -i)) == B_i(basket, i)
    assert contribution_sum(profile, r) == 0


@pytest.mark.property_based
@given(coprime_pairs(max_b=8))
@settings(max_examples=30, deadline=None)
def test_reduced_chi_identities(pair):
    profile = wbu_profile(*pair)
    a = profile.discrepancy
    ae3 = aE3_from_basket(profile.basket)
    values = {chi_quotient_reduced(profile, i) for i in range(1, a + 1)}
    assert len(values) == 1
    graded = graded_piece_dims(profile.weights, a)
    for j in range(a):
        step = chi_quotient_reduced(profile, -j) - chi_quotient_reduced(profile, j + 1)
        assert step == graded_dim_via_B(profile.basket, ae3, j) == graded[j]


@pytest.mark.acceptance
def test_terminal_criterion_matches_reid_tai():
    for w1 in range(1, TERMINAL_MAX_WEIGHT + 1):
        for w2 in range(w1, TERMINAL_MAX_WEIGHT + 1):
            for w3 in range(w2, TERMINAL_MAX_WEIGHT + 1):
                w = WeightTriple(w1, w2, w3)
                assert terminal_by_theorem(w) == terminal_by_charts(w), w


@pytest.mark.acceptance
def test_tower_bounds():
    for n in range(1, TOWER_MAX_N + 1):
        for m in range(1, n + 1):
            if gcd(m, n) == 1:
                tower = tower_profile(m, n)
                assert tower.discrepancy == m + n
                assert n <= tower.discrepancy - 1


@pytest.mark.parametrize("m, n", [(1, 4), (2, 5), (3, 7), (5, 8)])
def test_tower_coefficients_add_up_to_the_last_discrepancy(m, n):
    tower = tower_profile(m, n)
    assert [step.coefficient for step in tower.steps] == [1] * n
    weighted = sum(step.coefficient * (2 if step.center == "point" else 1) for step in tower.steps)
    assert weighted == tower.steps[-1].discrepancy == m + n
    assert tower.steps[-1].weights == (1, m, n)
