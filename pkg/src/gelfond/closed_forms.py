"""Closed-form evaluators for six classical summation theorems.

Each function returns the exact gamma-ratio value of a specific
hypergeometric sum:

  gauss_unit             2F1(a, b; c; 1)
  gauss_ext_unit         3F2(a, b, d+1; c+1, d; 1)
  second_gauss_half      2F1(a, b; (a+b+1)/2; 1/2)
  bailey_half            2F1(a, 1-a; c; 1/2)
  second_gauss_ext_half  3F2(a, b, d+1; (a+b+3)/2, d; 1/2)
  bailey_ext_half        3F2(a, 1-a, d+1; c+1, d; 1/2)

Gamma ratios are assembled in log space (one exponential at the end) so
that ratios of four gammas do not lose digits to intermediate overflow or
cancellation.  Gamma factors in denominators are applied as reciprocal
gammas, so a denominator pole contributes a factor of zero instead of
raising; the two extension formulas rely on this to take their finite
limits (e.g. a zero upper parameter).
"""

from __future__ import annotations

import cmath
import math

from .complex_gamma import is_near_nonpositive_int, log_gamma, reciprocal_gamma
from .errors import ConvergenceDomainError, PoleError

# 1/d appears in every extension theorem; closer to zero than this and the
# formula's value is dominated by the uncertainty of d itself.
D_MIN_ABS = 1e-6
D_POLE_TOLERANCE = 1e-6

_LN2 = math.log(2.0)


def _check_d(d: complex) -> complex:
    d = complex(d)
    if abs(d) < D_MIN_ABS:
        raise PoleError(f"extension parameter d = {d} is too close to 0")
    if is_near_nonpositive_int(d, D_POLE_TOLERANCE):
        raise PoleError(
            f"extension parameter d = {d} is within {D_POLE_TOLERANCE} of a "
            "non-positive integer"
        )
    return d


def gamma_ratio(numerator, denominator) -> complex:
    """prod Gamma(numerator) / prod Gamma(denominator), in log space.

    A pole among the numerator arguments raises PoleError; a pole among the
    denominator arguments makes the ratio zero.
    """
    for z in denominator:
        if is_near_nonpositive_int(complex(z)):
            return 0.0 + 0.0j
    acc = 0.0 + 0.0j
    for z in numerator:
        acc += log_gamma(complex(z))
    for z in denominator:
        acc -= log_gamma(complex(z))
    return cmath.exp(acc)


def gauss_unit(a: complex, b: complex, c: complex) -> complex:
    """2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)),
    valid for Re(c-a-b) > 0."""
    a, b, c = complex(a), complex(b), complex(c)
    s = c - a - b
    if s.real <= 0.0:
        raise ConvergenceDomainError(
            f"gauss_unit requires Re(c-a-b) > 0, got {s.real}"
        )
    return gamma_ratio((c, s), (c - a, c - b))


def gauss_ext_unit(a: complex, b: complex, c: complex, d: complex) -> complex:
    """3F2(a, b, d+1; c+1, d; 1) for Re(c-a-b) > 0 and admissible d:

        Gamma(c+1) Gamma(c-a-b) / (Gamma(c-a+1) Gamma(c-b+1))
            * (c - a - b + a*b/d)
    """
    a, b, c = complex(a), complex(b), complex(c)
    d = _check_d(d)
    s = c - a - b
    if s.real <= 0.0:
        raise ConvergenceDomainError(
            f"gauss_ext_unit requires Re(c-a-b) > 0, got {s.real}"
        )
    prefactor = gamma_ratio((c + 1, s), (c - a + 1, c - b + 1))
    return prefactor * (s + a * b / d)


def second_gauss_half(a: complex, b: complex) -> complex:
    """2F1(a, b; (a+b+1)/2; 1/2) =
    Gamma(1/2) Gamma((a+b+1)/2) / (Gamma((a+1)/2) Gamma((b+1)/2))."""
    a, b = complex(a), complex(b)
    return gamma_ratio((0.5, (a + b + 1) / 2), ((a + 1) / 2, (b + 1) / 2))


def bailey_half(a: complex, c: complex) -> complex:
    """2F1(a, 1-a; c; 1/2) =
    Gamma(c/2) Gamma(c/2 + 1/2) / (Gamma(c/2 + a/2) Gamma(c/2 - a/2 + 1/2))."""
    a, c = complex(a), complex(c)
    return gamma_ratio(
        (c / 2, c / 2 + 0.5), (c / 2 + a / 2, c / 2 - a / 2 + 0.5)
    )


def second_gauss_ext_half(a: complex, b: complex, d: complex) -> complex:
    """3F2(a, b, d+1; (a+b+3)/2, d; 1/2) for admissible d:

        Gamma(1/2) Gamma((a+b)/2 + 3/2) Gamma((a-b)/2 - 1/2)
            / Gamma((a-b)/2 + 3/2)
        * {  ((a+b-1)/2 - a*b/d) / (Gamma((a+1)/2) Gamma((b+1)/2))
           + ((a+b+1)/d - 2)     / (Gamma(a/2)     Gamma(b/2))     }
    """
    a, b = complex(a), complex(b)
    d = _check_d(d)
    prefactor = gamma_ratio(
        (0.5, (a + b) / 2 + 1.5, (a - b) / 2 - 0.5), ((a - b) / 2 + 1.5,)
    )
    brace = (
        ((a + b - 1) / 2 - a * b / d)
        * reciprocal_gamma((a + 1) / 2) * reciprocal_gamma((b + 1) / 2)
        + ((a + b + 1) / d - 2.0)
        * reciprocal_gamma(a / 2) * reciprocal_gamma(b / 2)
    )
    return prefactor * brace


def bailey_ext_half(a: complex, c: complex, d: complex) -> complex:
    """3F2(a, 1-a, d+1; c+1, d; 1/2) for admissible d:

        2^(-c) Gamma(1/2) Gamma(c+1)
        * {  (2/d)     / (Gamma(c/2 + a/2)       Gamma(c/2 - a/2 + 1/2))
           + (1 - c/d) / (Gamma(c/2 + a/2 + 1/2) Gamma(c/2 - a/2 + 1))   }
    """
    a, c = complex(a), complex(c)
    d = _check_d(d)
    prefactor = cmath.exp(-c * _LN2 + log_gamma(0.5) + log_gamma(c + 1))
    brace = (
        (2.0 / d)
        * reciprocal_gamma(c / 2 + a / 2) * reciprocal_gamma(c / 2 - a / 2 + 0.5)
        + (1.0 - c / d)
        * reciprocal_gamma(c / 2 + a / 2 + 0.5) * reciprocal_gamma(c / 2 - a / 2 + 1.0)
    )
    return prefactor * brace
