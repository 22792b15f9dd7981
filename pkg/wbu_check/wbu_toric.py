"""
The weighted blow-up (1, a, b) of a smooth 3-fold point as a toric model,
the terminality criterion for weighted blow-ups, and the tower of blow-ups
whose last exceptional divisor realizes a weight (1, m, n) valuation.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

from .core_arith import gcd, lcm, mod_inverse, smallest_residue
from .errors import DomainError, VerificationError
from .monomial_ideals import WeightTriple, valuation_ideal
from .reid_rr import B_i, Basket, QuotientSingularity, contribution

logger = logging.getLogger(__name__)

CHART_NAMES = ("x-chart", "y-chart", "z-chart")


@dataclass(frozen=True)
class ChartSingularity:
    chart: str
    index: int
    weights: tuple

    def type_string(self):
        return f"1/{self.index}{self.weights}".replace(" ", "")


@dataclass(frozen=True)
class ChartPoint:
    """A non-Gorenstein chart point of a (1, a, b) blow-up with its basket value v."""
    chart: str
    singularity: QuotientSingularity
    v: int


@dataclass(frozen=True)
class WbuProfile:
    a: int
    b: int
    discrepancy: int
    E3: Fraction
    basket: Basket
    e: int
    charts: tuple

    @property
    def weights(self):
        return WeightTriple(1, self.a, self.b)


@dataclass(frozen=True)
class TowerStep:
    index: int
    center: str
    weights: tuple
    discrepancy: int
    coefficient: int


@dataclass(frozen=True)
class TowerProfile:
    m: int
    n: int
    steps: tuple
    discrepancy: int


def chart_singularities(w):
    """Cyclic quotient 1/w_k(w_j mod w_k for j != k, -1 at k) of every chart with w_k >= 2."""
    weights = w.as_tuple()
    charts = []
    for k, index in enumerate(weights):
        if index < 2:
            continue
        action = tuple(
            smallest_residue(-1 if j == k else weights[j], index) for j in range(3)
        )
        charts.append(ChartSingularity(CHART_NAMES[k], index, action))
    return charts


def reid_tai_terminal(r, weights):
    """1/r(w1, w2, w3) is terminal iff every k in 1..r-1 has age sum > r."""
    if r < 2:
        raise DomainError(f"index must be at least 2, got {r}")
    for k in range(1, r):
        if sum(smallest_residue(k * w, r) for w in weights) <= r:
            return False
    return True


def terminal_by_charts(w):
    return all(reid_tai_terminal(c.index, c.weights) for c in chart_singularities(w))


def terminal_by_theorem(w):
    """Weights sorted as (r, a, b): terminal iff r = 1 and gcd(a, b) = 1."""
    canonical, _ = w.canonicalize()
    return canonical.wx == 1 and gcd(canonical.wy, canonical.wz) == 1


def wbu_profile(a, b):
    """Discrepancy, E^3, chart points and basket of the (1, a, b) blow-up."""
    if a < 1 or b < 1:
        raise DomainError(f"weights must be positive, got ({a}, {b})")
    if a > b:
        raise DomainError(f"expected a <= b, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise DomainError(f"weights ({a}, {b}) are not coprime")

    discrepancy = a + b
    e3 = Fraction(1, a * b)

    # y-chart 1/a(1, -1, b); z-chart 1/b(1, a, -1) rewritten as 1/b(1, -1, a)
    singularities = []
    if a >= 2:
        singularities.append(("y-chart", QuotientSingularity(a, b)))
    if b >= 2:
        singularities.append(("z-chart", QuotientSingularity(b, a)))

    index = lcm(a, b)
    e = mod_inverse(discrepancy, index)
    charts = tuple(
        ChartPoint(name, q, smallest_residue(e * q.b, q.r)) for name, q in singularities
    )
    basket = Basket.of([(point.singularity.r, point.v) for point in charts])

    if basket.index != index:
        raise VerificationError("basket index", {"a": a, "b": b, "index": basket.index, "expected": index})
    if (discrepancy * e) % index != 1 % index:
        raise VerificationError("ae = 1 mod r", {"a": discrepancy, "e": e, "r": index})
    if 1 != Fraction(discrepancy, 2) * e3 + B_i(basket, 1):
        raise VerificationError("identity (B)", {"a": a, "b": b, "basket": basket, "E3": e3})

    logger.debug("profile (1,%d,%d): discrepancy %d, basket %s, e %d", a, b, discrepancy, basket, e)
    return WbuProfile(a, b, discrepancy, e3, basket, e, charts)


def dim_quotient_monomial(profile):
    """dim f_*O_Y(-2E)/m_P^2 on the monomial side: linear generators of the threshold-2 ideal."""
    return valuation_ideal(profile.weights, 2).degree_one_generators()


def contribution_sum(profile, i):
    """A_i = sum over the chart points of c_Q(iE), with O(E) = O(eK) near each point."""
    return sum(
        (contribution(point.singularity, i * profile.e) for point in profile.charts),
        Fraction(0),
    )


def chi_quotient_reduced(profile, i):
    """chi(Q_i) without its E.c_2(Y)/12 term."""
    a = profile.discrepancy
    cubic = Fraction(2 * (3 * i * i - 3 * i + 1) - 3 * (2 * i - 1) * a + a * a, 12)
    return cubic * profile.E3 + contribution_sum(profile, i) - contribution_sum(profile, i - 1)


def realizing_pair(basket, a):
    """Coprime p <= q with p + q = a whose blow-up has this basket, or None."""
    for p in range(1, a // 2 + 1):
        q = a - p
        if gcd(p, q) == 1 and wbu_profile(p, q).basket == basket:
            return (p, q)
    return None


def _binomial_value(w, monomials):
    return min(w.value(mono) for mono in monomials)


def tower_profile(m, n):
    """Blow-up tower whose i-th divisor is the (1, min(i, m), i) valuation."""
    if m < 1 or n < 1 or m > n:
        raise DomainError(f"expected 1 <= m <= n, got ({m}, {n})")
    if gcd(m, n) != 1:
        raise DomainError(f"({m}, {n}) are not coprime; the last blow-up would not be terminal")

    last = WeightTriple(1, m, n)
    previous_value = 0
    steps = []
    for i in range(1, n + 1):
        # smooth divisor through Z_{i-1} but not Z_i: y + x^i up to m, then z + x^i
        if i <= m:
            divisor = ((0, 1, 0), (i, 0, 0))
        else:
            divisor = ((0, 0, 1), (i, 0, 0))
        value = _binomial_value(last, divisor)
        steps.append(TowerStep(
            index=i,
            center="point" if i <= m else "curve",
            weights=(1, min(i, m), i),
            discrepancy=min(i, m) + i,
            coefficient=value - previous_value,
        ))
        previous_value = value

    discrepancy = sum(
        step.coefficient * (2 if step.center == "point" else 1) for step in steps
    )
    operands = {"m": m, "n": n, "discrepancy": discrepancy}
    # D_i is chosen with v_n(D_i) = i, so every c_i is 1 by construction and this
    # only guards the step bookkeeping. The discrepancy check below compares the
    # summed coefficients with the last step's own weights.
    if any(step.coefficient != 1 for step in steps):
        raise VerificationError("pullback coefficient bookkeeping", operands, "coefficient of F_n is not 1")
    if discrepancy != m + n or steps[-1].discrepancy != discrepancy:
        raise VerificationError("discrepancy = m + n", operands)
    if n > discrepancy - 1:
        raise VerificationError("n <= a - 1", operands)

    return TowerProfile(m, n, tuple(steps), discrepancy)
