from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wbu_check.errors import DomainError, InfeasibleBasketError
from wbu_check.reid_rr import (
    B_i,
    Basket,
    BasketEntry,
    QuotientSingularity,
    aE3_from_basket,
    check_A,
    colength_via_C,
    contribution,
    dim_quotient_D,
    graded_dim_via_B,
    max_discrepancy,
    min_term_identity,
    pair_sum,
    parse_basket,
    partial_sum_d,
    sumchi_via_B1,
)


@st.composite
def entries(draw, max_r=25):
    r = draw(st.integers(2, max_r))
    v = draw(st.integers(1, r - 1).filter(lambda v: gcd(v, r) == 1))
    return (r, v)


baskets = st.lists(entries(max_r=9), max_size=3).map(Basket.of)


def test_contribution_known_values():
    assert contribution(QuotientSingularity(2, 1), 2) == 0
    assert contribution(QuotientSingularity(2, 1), 1) == Fraction(-1, 8)
    assert contribution(QuotientSingularity(5, 2), 2) == Fraction(-1, 5)


def test_quotient_singularity_validation():
    assert QuotientSingularity(5, 7).b == 2
    assert QuotientSingularity(5, 2).type_string() == "1/5(1,-1,2)"
    with pytest.raises(DomainError):
        QuotientSingularity(4, 2)
    with pytest.raises(DomainError):
        QuotientSingularity(1, 0)


def test_B_i_known_values():
    assert B_i(Basket.of([(5, 2)]), 1) == Fraction(3, 5)
    assert B_i(Basket.of([(5, 2)]), 5) == 0
    assert B_i(Basket.of([(2, 1), (3, 2)]), 1) == Fraction(7, 12)


def test_aE3_known_values():
    assert aE3_from_basket(Basket()) == 2
    assert aE3_from_basket(Basket.of([(7, 3)])) == Fraction(2, 7)
    assert aE3_from_basket(Basket.of([(2, 1), (5, 2)])) == Fraction(3, 10)


def test_infeasible_basket():
    with pytest.raises(InfeasibleBasketError):
        aE3_from_basket(Basket.of([(9, 2), (2, 1)]))
    with pytest.raises(DomainError):
        max_discrepancy(Basket.of([(2, 1), (2, 1), (2, 1), (2, 1)]))


def test_check_A():
    assert check_A(Basket.of([(7, 3)]), 2)
    assert not check_A(Basket.of([(7, 3)]), 3)
    assert check_A(Basket(), 2)
    with pytest.raises(DomainError):
        check_A(Basket(), 1)


def test_max_discrepancy_known_values():
    assert max_discrepancy(Basket.of([(7, 3)])) == 2
    assert max_discrepancy(Basket.of([(2, 1), (3, 1)])) == 5
    assert max_discrepancy(Basket.of([(2, 1), (3, 1), (5, 1)])) is None
    assert max_discrepancy(Basket.of([(5, 2)])) == 4
    for r in range(2, 13):
        assert max_discrepancy(Basket.of([(r, 1)])) == r + 1


def test_colength_via_C_known_values():
    assert colength_via_C(Basket(), 1) == 1
    assert colength_via_C(Basket(), 2) == 4
    assert colength_via_C(Basket.of([(2, 1), (3, 2)]), 5) == 11
    assert colength_via_C(Basket.of([(2, 1), (3, 2)]), 4) == 7
    with pytest.raises(DomainError):
        colength_via_C(Basket(), 0)


def test_dim_quotient_D():
    assert dim_quotient_D(Basket()) == 0
    assert dim_quotient_D(Basket.of([(7, 3)])) == 3
    assert dim_quotient_D(Basket.of([(2, 1), (3, 1)])) == 2
    assert dim_quotient_D(Basket.of([(7, 4)])) == 3


def test_partial_sum_d():
    basket = Basket.of([(2, 1), (3, 2)])
    assert partial_sum_d(basket, Fraction(5, 6), 1) == 0
    assert partial_sum_d(basket, Fraction(5, 6), 5) == 10
    for r in range(2, 10):
        single = Basket.of([(r, 1)])
        for i in range(1, r + 1):
            assert partial_sum_d(single, Fraction(r + 1, r), i) == i * (i + 1) // 2 - 1


def test_graded_dim_at_zero_is_one():
    for basket in (Basket(), Basket.of([(2, 1), (3, 1)]), Basket.of([(7, 3)])):
        assert graded_dim_via_B(basket, aE3_from_basket(basket), 0) == 1


def test_basket_entry_canonical_form_keeps_input():
    entry = BasketEntry(7, 4)
    assert entry.as_pair() == (7, 3)
    assert entry.given_v == 4
    assert entry == BasketEntry(7, 3)
    with pytest.raises(DomainError):
        BasketEntry(6, 3)


def test_parse_basket():
    basket = parse_basket("(2,1),(3,2)")
    assert basket.canonical_entries() == [(2, 1), (3, 1)]
    assert basket.display_entries() == [(2, 1), (3, 2)]
    assert basket.index == 6
    assert str(basket) == "{(2,1),(3,1)}"
    assert parse_basket("{}") == Basket()
    assert parse_basket("") == Basket()
    assert parse_basket("{(5, 2)}") == Basket.of([(5, 2)])
    assert Basket().index == 1


@pytest.mark.parametrize("text", [
    "(2,1),(4,2)", "(2,1) junk", "(1,0)", "2,1",
    "(2,1),,(3,1)", "(2,1)(3,1)", ",(2,1),", "(2,1),",
])
def test_parse_basket_rejects_bad_input(text):
    with pytest.raises(DomainError):
        parse_basket(text)


@pytest.mark.property_based
@given(entries(), st.integers(1, 30))
@settings(max_examples=200)
def test_colength_invariant_under_v_flip(entry, i):
    r, v = entry
    original = colength_via_C(Basket.of([(r, v)]), i)
    flipped = colength_via_C(Basket.of([(r, r - v)]), i)
    assert original == flipped


@pytest.mark.property_based
@given(entries(), st.integers(1, 30))
@settings(max_examples=200)
def test_min_term_identity(entry, i):
    lhs, rhs = min_term_identity(BasketEntry(*entry), i)
    assert lhs == rhs


@pytest.mark.property_based
@given(entries(), st.integers(-60, 60), st.integers(1, 24))
@settings(max_examples=200)
def test_pair_sum_identity(entry, i, e_seed):
    r, b = entry
    e = next(k for k in range(e_seed, e_seed + r + 1) if gcd(k, r) == 1)
    lhs, rhs = pair_sum(QuotientSingularity(r, b), e, i)
    assert lhs == rhs


@pytest.mark.property_based
@given(entries(), st.integers(-60, 60))
@settings(max_examples=200)
def test_contribution_is_periodic(entry, i):
    r, b = entry
    q = QuotientSingularity(r, b)
    assert contribution(q, i) == contribution(q, i + r)
    assert contribution(q, r * i) == 0


@pytest.mark.property_based
@given(baskets, st.integers(1, 12))
@settings(max_examples=100, deadline=None)
def test_partial_sum_forms_agree(basket, i):
    if B_i(basket, 1) >= 1:
        return
    ae3 = aE3_from_basket(basket)
    assert sumchi_via_B1(basket, i) == partial_sum_d(basket, ae3, i)
    assert 1 + partial_sum_d(basket, ae3, i) == colength_via_C(basket, i)


def test_dim_lower_bound_for_single_point():
    for r in range(2, 13):
        basket = Basket.of([(r, 1)])
        for i in range(1, r + 2):
            value = colength_via_C(basket, i)
            assert value >= i * (i + 1) // 2
            assert (value == i * (i + 1) // 2) == (i <= r)
    assert [colength_via_C(Basket.of([(4, 1)]), i) for i in range(1, 5)] == [1, 3, 6, 10]
    assert colength_via_C(Basket.of([(4, 1)]), 5) == 16


def test_dim2_lower_bound_for_two_points():
    for r1 in range(2, 9):
        for r2 in range(r1, 9):
            basket = Basket.of([(r1, 1), (r2, 1)])
            for i in range(1, r1 + r2 + 1):
                value = colength_via_C(basket, i)
                assert value >= i
                assert (value == i) == (i <= r1)
