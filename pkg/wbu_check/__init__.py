"""Verification toolkit for 3-fold divisorial contractions to smooth points."""

from .classifier_enum import enumerate_baskets, verify_2E_contradiction, verify_nE_cases
from .core_arith import Rational, rational, smallest_residue
from .errors import ArithmeticWidthError, DomainError, InfeasibleBasketError, VerificationError, WbuCheckError
from .monomial_ideals import MonomialIdeal, WeightTriple, colength_bruteforce, colength_closed_form, valuation_ideal
from .reid_rr import Basket, BasketEntry, QuotientSingularity, aE3_from_basket, contribution, parse_basket
from .wbu_toric import tower_profile, wbu_profile

__all__ = [
    "ArithmeticWidthError",
    "Basket",
    "BasketEntry",
    "DomainError",
    "InfeasibleBasketError",
    "MonomialIdeal",
    "QuotientSingularity",
    "Rational",
    "VerificationError",
    "WbuCheckError",
    "WeightTriple",
    "aE3_from_basket",
    "colength_bruteforce",
    "colength_closed_form",
    "contribution",
    "enumerate_baskets",
    "parse_basket",
    "rational",
    "smallest_residue",
    "tower_profile",
    "valuation_ideal",
    "verify_2E_contradiction",
    "verify_nE_cases",
    "wbu_profile",
]
