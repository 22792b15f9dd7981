"""
Exact arithmetic shared by every module:
- reduced fractions (fractions.Fraction) with a signed 128-bit width guard
- smallest residues with floor semantics
- gcd / lcm / modular inverse

No floating point is used anywhere in the package.
"""

import math
from fractions import Fraction
from functools import reduce

from .config import INT_LIMIT
from .errors import ArithmeticWidthError, DomainError

# Every rational quantity (E^3, aE^3, c_Q(iE), A_i, B_i) is a Fraction,
# always stored reduced with a positive denominator.
Rational = Fraction

RATIONAL_OPS = ("add", "sub", "mul", "div", "compare", "is_integer")


def checked(value):
    """Return value unchanged, or raise if it leaves the 128-bit window."""
    if isinstance(value, Fraction):
        parts = (value.numerator, value.denominator)
    else:
        parts = (value,)
    for part in parts:
        if not -INT_LIMIT <= part < INT_LIMIT:
            raise ArithmeticWidthError(f"{value} does not fit in a signed 128-bit integer")
    return value


def rational(numerator, denominator=1):
    if denominator == 0:
        raise DomainError("zero denominator")
    return checked(Fraction(numerator, denominator))


def smallest_residue(j, r):
    """j - floor(j / r) * r, the residue of j in [0, r - 1]."""
    if r < 1:
        raise DomainError(f"modulus must be positive, got {r}")
    return j % r


def add(x, y):
    return checked(Fraction(x) + Fraction(y))


def sub(x, y):
    return checked(Fraction(x) - Fraction(y))


def mul(x, y):
    return checked(Fraction(x) * Fraction(y))


def div(x, y):
    if y == 0:
        raise DomainError("division by zero")
    return checked(Fraction(x) / Fraction(y))


def compare(x, y):
    x, y = Fraction(x), Fraction(y)
    if x < y:
        return "less"
    if x > y:
        return "greater"
    return "equal"


def is_integer(x):
    return Fraction(x).denominator == 1


def rational_op(op, x, y=None):
    """Dispatch one of RATIONAL_OPS by name."""
    if op == "is_integer":
        return is_integer(x)
    handlers = {"add": add, "sub": sub, "mul": mul, "div": div, "compare": compare}
    if op not in handlers:
        raise DomainError(f"unknown rational operation {op!r}")
    return handlers[op](x, y)


def gcd(*values):
    return math.gcd(*values)


def lcm(m, n):
    return checked(math.lcm(m, n))


def lcm_all(values):
    """lcm of an iterable; 1 for an empty one."""
    return checked(reduce(math.lcm, values, 1))


def mod_inverse(a, r):
    """Least positive inverse of a modulo r (1 when r == 1)."""
    if r < 1:
        raise DomainError(f"modulus must be positive, got {r}")
    if r == 1:
        return 1
    if math.gcd(a, r) != 1:
        raise DomainError(f"{a} is not invertible modulo {r}")
    return pow(a, -1, r)


def format_rational(x):
    """Wire form "p/q"; the denominator is always written."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text):
    """Inverse of format_rational; a bare integer is accepted too."""
    cleaned = str(text).strip()
    if not cleaned:
        raise DomainError("empty rational")
    numerator, _, denominator = cleaned.partition("/")
    try:
        p = int(numerator)
        q = int(denominator) if denominator else 1
    except ValueError as exc:
        raise DomainError(f"malformed rational {text!r}") from exc
    return rational(p, q)
