"""Double-double arithmetic: unevaluated sums of two binary64 values.

A DDReal(hi, lo) represents hi + lo with |lo| <= ulp(hi)/2, giving about
31-32 significant decimal digits.  The primitives are the classical
error-free transformations (Knuth two-sum, Dekker/Veltkamp split and
two-product); every public operation renormalizes its result.

This is the minimal precision that resolves deviations like 7.5e-13 in a
value of magnitude 2.6e17 (30-31 digits needed); a general bignum would be
out of proportion to that need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, RangeError

_SPLITTER = 134217729.0            # 2^27 + 1, Veltkamp splitting constant


def two_sum(a: float, b: float) -> tuple[float, float]:
    """(s, e) with s = fl(a+b) and s + e == a + b exactly."""
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a: float, b: float) -> tuple[float, float]:
    """two_sum specialization requiring |a| >= |b|."""
    s = a + b
    return s, b - (s - a)


def split(a: float) -> tuple[float, float]:
    """Veltkamp split into two 26/27-bit halves with hi + lo == a exactly."""
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a: float, b: float) -> tuple[float, float]:
    """(p, e) with p = fl(a*b) and p + e == a * b exactly."""
    p = a * b
    ahi, alo = split(a)
    bhi, blo = split(b)
    e = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, e


@dataclass(frozen=True)
class DDReal:
    hi: float
    lo: float = 0.0

    @staticmethod
    def from_float(x: float) -> "DDReal":
        return DDReal(float(x), 0.0)

    @staticmethod
    def from_int(value: int) -> "DDReal":
        hi = float(value)
        lo = float(value - int(hi))
        s, e = quick_two_sum(hi, lo)
        return DDReal(s, e)

    def to_float(self) -> float:
        return self.hi + self.lo

    def to_fraction(self) -> Fraction:
        return Fraction(self.hi) + Fraction(self.lo)

    def __float__(self) -> float:
        return self.to_float()

    def __neg__(self) -> "DDReal":
        return DDReal(-self.hi, -self.lo)

    def __add__(self, other):
        return dd_add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return dd_add(self, -_coerce(other))

    def __rsub__(self, other):
        return dd_add(_coerce(other), -self)

    def __mul__(self, other):
        return dd_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return dd_div(self, _coerce(other))

    def __rtruediv__(self, other):
        return dd_div(_coerce(other), self)


def _coerce(x) -> DDReal:
    if isinstance(x, DDReal):
        return x
    if isinstance(x, int):
        return DDReal.from_int(x)
    return DDReal.from_float(float(x))


def dd_add(x: DDReal, y: DDReal) -> DDReal:
    s, e = two_sum(x.hi, y.hi)
    t, f = two_sum(x.lo, y.lo)
    e += t
    s, e = quick_two_sum(s, e)
    e += f
    s, e = quick_two_sum(s, e)
    return DDReal(s, e)


def dd_sub(x: DDReal, y: DDReal) -> DDReal:
    return dd_add(x, -y)


def dd_mul(x: DDReal, y: DDReal) -> DDReal:
    p, e = two_prod(x.hi, y.hi)
    e += x.hi * y.lo + x.lo * y.hi
    s, e = quick_two_sum(p, e)
    return DDReal(s, e)


def dd_div(x: DDReal, y: DDReal) -> DDReal:
    """Long division with two refinement steps (relative error ~2^-104)."""
    if y.hi == 0.0 and y.lo == 0.0:
        raise ZeroDivisionError("double-double division by zero")
    q1 = x.hi / y.hi
    r = dd_sub(x, dd_mul(DDReal(q1), y))
    q2 = r.hi / y.hi
    r = dd_sub(r, dd_mul(DDReal(q2), y))
    q3 = r.hi / y.hi
    s, e = quick_two_sum(q1, q2)
    return dd_add(DDReal(s, e), DDReal(q3))


def dd_sqrt(x: DDReal) -> DDReal:
    """Square root via a double seed plus one Newton correction in dd."""
    if x.hi < 0.0:
        raise DomainError(f"dd_sqrt of negative value {x.hi}")
    if x.hi == 0.0 and x.lo == 0.0:
        return DDReal(0.0, 0.0)
    a = math.sqrt(x.hi)
    p, e = two_prod(a, a)
    r = dd_sub(x, DDReal(p, e))
    s, err = quick_two_sum(a, r.hi / (2.0 * a))
    return DDReal(s, err)


# pi and ln 2 to double-double precision (hi = nearest binary64, lo = the
# rounded remainder; together ~32 significant decimal digits)
_DD_PI = DDReal(3.141592653589793, 1.2246467991473532e-16)
_DD_LN2 = DDReal(0.6931471805599453, 2.3190468138462996e-17)


def dd_pi() -> DDReal:
    return _DD_PI


def dd_ln2() -> DDReal:
    return _DD_LN2


# ln 2 as three parts for exact argument reduction: L1 and L2 carry <= 43
# significand bits, so k*L1 and k*L2 are exact binary64 products for the
# |k| <= 1011 reachable under |x| <= 700.
_LN2_P1 = 0.6931471805598903
_LN2_P2 = 5.4979230187085024e-14
_LN2_P3 = -1.3124698417785255e-27

EXP_ARG_LIMIT = 700.0
_EXP_TAYLOR_ORDER = 30   # term 31 is below 2^-106 of e^r for |r| <= ln2/2


def dd_exp(x: DDReal) -> DDReal:
    """e^x in double-double for |x| <= 700.

    Reduces x = k*ln2 + r with |r| <= ln2/2 (the k*ln2 product is formed
    from the exact three-part ln 2 so the constant contributes ~1e-35, not
    k ulps), sums the order-30 Taylor series of e^r, and scales by 2^k.
    """
    x = _coerce(x)
    if not (abs(x.hi) <= EXP_ARG_LIMIT):
        raise RangeError(f"dd_exp argument {x.hi} outside |x| <= {EXP_ARG_LIMIT}")
    k = round(x.hi / _LN2_P1)
    r = x
    if k != 0:
        r = dd_sub(r, DDReal(k * _LN2_P1))          # exact product
        r = dd_sub(r, DDReal(k * _LN2_P2))          # exact product
        p, e = two_prod(float(k), _LN2_P3)
        r = dd_sub(r, DDReal(p, e))
    total = DDReal(1.0)
    term = DDReal(1.0)
    for order in range(1, _EXP_TAYLOR_ORDER + 1):
        term = dd_mul(term, r)
        term = dd_div(term, DDReal(float(order)))
        total = dd_add(total, term)
    return DDReal(math.ldexp(total.hi, k), math.ldexp(total.lo, k))


def dd_round(x: DDReal) -> int:
    """Nearest integer to hi + lo, exact for |x| within binary64 int range."""
    base = int(round(x.hi))
    frac = dd_add(DDReal(x.hi - base), DDReal(x.lo))
    return base + int(round(frac.hi))


def dd_to_decimal(x: DDReal, digits: int = 31) -> str:
    """Decimal string with ``digits`` significant digits, computed exactly
    from the underlying rational value (no float formatting involved)."""
    frac = x.to_fraction()
    if frac == 0:
        return "0." + "0" * (digits - 1) + "e+0"
    sign = "-" if frac < 0 else ""
    frac = abs(frac)
    exponent = 0
    while frac >= 10:
        frac /= 10
        exponent += 1
    while frac < 1:
        frac *= 10
        exponent -= 1
    scaled = frac * Fraction(10) ** (digits - 1)
    mantissa = int(scaled)
    if scaled - mantissa >= Fraction(1, 2):
        mantissa += 1
        if mantissa >= 10 ** digits:
            mantissa //= 10
            exponent += 1
    text = str(mantissa)
    return f"{sign}{text[0]}.{text[1:]}e{exponent:+d}"
