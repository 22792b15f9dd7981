"""
Monomial valuation ideals in k[x, y, z].

The valuation with weights (wx, wy, wz) gives x^s y^t z^u the value
s*wx + t*wy + u*wz. Its ideals (x^s y^t z^u | value >= i) are the
f_*O_Y(-iE) of a weighted blow-up, and counting monomials below a threshold
is the independent oracle the Riemann-Roch formulas are checked against.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError

logger = logging.getLogger(__name__)

MAXIMAL_IDEAL_GENERATORS = ((0, 0, 1), (0, 1, 0), (1, 0, 0))


@dataclass(frozen=True)
class WeightTriple:
    wx: int
    wy: int
    wz: int

    def __post_init__(self):
        if min(self.wx, self.wy, self.wz) < 1:
            raise DomainError(f"weights must be positive, got {self.as_tuple()}")

    def as_tuple(self):
        return (self.wx, self.wy, self.wz)

    def value(self, monomial):
        s, t, u = monomial
        return s * self.wx + t * self.wy + u * self.wz

    def canonicalize(self):
        """Sorted copy plus the permutation: position k of the result is original variable perm[k]."""
        weights = self.as_tuple()
        perm = tuple(sorted(range(3), key=lambda k: (weights[k], k)))
        return WeightTriple(*(weights[k] for k in perm)), perm

    def is_canonical(self):
        return self.wx <= self.wy <= self.wz


def _divides(g, h):
    return g[0] <= h[0] and g[1] <= h[1] and g[2] <= h[2]


def _minimalize(monomials):
    unique = sorted(set(monomials))
    return tuple(
        g for g in unique
        if not any(h != g and _divides(h, g) for h in unique)
    )


@dataclass(frozen=True)
class MonomialIdeal:
    """An ideal given by its minimal generators, sorted lexicographically."""
    generators: tuple

    @classmethod
    def from_generators(cls, monomials):
        for mono in monomials:
            if len(mono) != 3 or min(mono) < 0:
                raise DomainError(f"not an exponent triple: {mono}")
        return cls(_minimalize(tuple(tuple(m) for m in monomials)))

    def contains(self, monomial):
        return any(_divides(g, monomial) for g in self.generators)

    def degree_one_generators(self):
        return sum(1 for g in self.generators if sum(g) == 1)

    def pure_powers(self):
        """Smallest exponent of each variable alone, or None when absent."""
        powers = []
        for axis in range(3):
            exps = [g[axis] for g in self.generators if sum(g) == g[axis]]
            powers.append(min(exps) if exps else None)
        return tuple(powers)

    def colength(self):
        """dim_k k[x,y,z]/I, counted over the box cut out by the pure powers."""
        powers = self.pure_powers()
        if None in powers:
            raise DomainError(f"ideal {self.generators} has infinite colength")
        s, t, u = np.ogrid[0:powers[0], 0:powers[1], 0:powers[2]]
        inside = np.zeros(powers, dtype=bool)
        for gs, gt, gu in self.generators:
            inside |= (s >= gs) & (t >= gt) & (u >= gu)
        return int(inside.size - np.count_nonzero(inside))

    def monomial_strings(self):
        return [monomial_to_string(g) for g in self.generators]


def monomial_to_string(monomial):
    parts = []
    for name, exp in zip("xyz", monomial):
        if exp == 1:
            parts.append(name)
        elif exp > 1:
            parts.append(f"{name}^{exp}")
    return "*".join(parts) if parts else "1"


def valuation_ideal(w, threshold):
    """Minimal generators of (x^s y^t z^u | s*wx + t*wy + u*wz >= threshold)."""
    if threshold < 1:
        raise DomainError(f"threshold must be positive, got {threshold}")
    t_cap = -(-threshold // w.wy)
    u_cap = -(-threshold // w.wz)

    def min_s(t, u):
        rest = threshold - t * w.wy - u * w.wz
        return max(0, -(-rest // w.wx))

    # s(t, u) is non-increasing in t and u, so (s, t, u) is minimal exactly
    # when stepping t or u down strictly raises the required s.
    generators = []
    for t in range(t_cap + 1):
        for u in range(u_cap + 1):
            s = min_s(t, u)
            if t > 0 and min_s(t - 1, u) <= s:
                continue
            if u > 0 and min_s(t, u - 1) <= s:
                continue
            generators.append((s, t, u))
    logger.debug("valuation ideal %s >= %d: %d generators", w.as_tuple(), threshold, len(generators))
    return MonomialIdeal(tuple(sorted(generators)))


def ideal_sum(first, second):
    return MonomialIdeal.from_generators(first.generators + second.generators)


def ideal_equals_max(ideal):
    """True iff the ideal is m_P = (x, y, z)."""
    return tuple(sorted(ideal.generators)) == MAXIMAL_IDEAL_GENERATORS


def ideal_inside_max_squared(ideal):
    """True iff every generator has total degree >= 2."""
    return all(sum(g) >= 2 for g in ideal.generators)


def _box(w, threshold):
    s, t, u = np.ogrid[
        0:-(-threshold // w.wx),
        0:-(-threshold // w.wy),
        0:-(-threshold // w.wz),
    ]
    return s * w.wx + t * w.wy + u * w.wz


@lru_cache(maxsize=4096)
def colength_bruteforce(w, threshold):
    """Number of monomials whose weight is below threshold."""
    if threshold < 1:
        raise DomainError(f"threshold must be positive, got {threshold}")
    values = _box(w, threshold)
    return int(np.count_nonzero(values < threshold))


def graded_piece_dims(w, top):
    """Number of monomials of weight exactly j, for 0 <= j < top."""
    if top < 1:
        return []
    values = _box(w, top)
    counts = np.bincount(values[values < top].ravel(), minlength=top)
    return [int(c) for c in counts[:top]]


def colength_closed_form(l, m):
    """l - (1/2) min_{0 <= j < l} ((1 + j)m - 2l)j."""
    if l < 1 or m < 1:
        raise DomainError(f"l and m must be positive, got ({l}, {m})")
    lowest = min(((1 + j) * m - 2 * l) * j for j in range(l))
    # j(j+1)m and 2lj are both even
    return l - lowest // 2


def restate_conditions(w):
    """(condition 1, condition 2) for weights sorted as (1, m, n)."""
    canonical, _ = w.canonicalize()
    condition_1 = not ideal_equals_max(valuation_ideal(canonical, 2))
    condition_2 = not ideal_inside_max_squared(valuation_ideal(canonical, canonical.wz))
    return condition_1, condition_2


def claim_r1_colength(m):
    """dim_k O_X / ((z) + (x^s y^t z^u | s + mt + mu >= m + 1))."""
    if m < 1:
        raise DomainError(f"m must be positive, got {m}")
    z_ideal = MonomialIdeal(((0, 0, 1),))
    tail = valuation_ideal(WeightTriple(1, m, m), m + 1)
    return ideal_sum(z_ideal, tail).colength()
