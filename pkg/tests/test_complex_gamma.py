import cmath
import math

import pytest

from gelfond import PoleError, RangeError, gamma, log_gamma, reciprocal_gamma, sin_pi
from conftest import COSH_PI, SINH_PI, random_complex, rel_err


def test_log_gamma_at_one_and_half():
    assert abs(log_gamma(1)) <= 1e-14
    assert abs(log_gamma(0.5) - math.log(math.sqrt(math.pi))) <= 1e-14


def test_log_gamma_strip_product():
    # Gamma(1/2+iy) Gamma(1/2-iy) = pi / cosh(pi y) at y = 1, via exp oracle
    value = cmath.exp(log_gamma(0.5 + 1j)) * cmath.exp(log_gamma(0.5 - 1j))
    assert rel_err(value, math.pi / COSH_PI) <= 1e-13


def test_gamma_factorial():
    assert rel_err(gamma(5), 24.0) <= 1e-14


def test_gamma_conjugate_product():
    # Gamma(1+i) Gamma(1-i) = pi / sinh(pi), sinh from exponentials
    assert rel_err(gamma(1 + 1j) * gamma(1 - 1j), math.pi / SINH_PI) <= 1e-13


def test_gamma_negative_half_integer():
    # Gamma(-3/2) = Gamma(1/2) / ((-3/2)(-1/2)) = 4 sqrt(pi) / 3
    assert rel_err(gamma(-1.5), 4.0 * math.sqrt(math.pi) / 3.0) <= 1e-13


@pytest.mark.parametrize("z", [0.0, -1.0, -7.0, -3 + 1e-13, complex(0, 5e-13)])
def test_pole_error(z):
    with pytest.raises(PoleError):
        gamma(z)


def test_reflection_strip_limit():
    with pytest.raises(RangeError):
        log_gamma(complex(-0.25, 31.0))
    # the limit only applies to the reflection path
    assert cmath.isfinite(log_gamma(complex(2.0, 40.0)))


def test_gamma_overflow_raises():
    with pytest.raises(RangeError):
        gamma(200.0)


def test_reciprocal_gamma_zero_at_poles():
    assert reciprocal_gamma(0) == 0
    assert reciprocal_gamma(-4) == 0
    assert rel_err(reciprocal_gamma(0.5), 1 / math.sqrt(math.pi)) <= 1e-13


def _pole_safe(z: complex) -> bool:
    k = round(z.real)
    return not (k <= 0 and abs(z - k) < 0.05)


def test_recurrence_property(rng):
    checked = 0
    while checked < 1000:
        z = random_complex(rng, 20.0)
        if not (_pole_safe(z) and _pole_safe(z + 1)):
            continue
        lhs = gamma(z + 1)
        assert abs(lhs - z * gamma(z)) / abs(lhs) <= 1e-12
        checked += 1


def test_reflection_property(rng):
    checked = 0
    while checked < 1000:
        z = random_complex(rng, 20.0)
        if abs(z.imag) < 1e-3 and abs(z.real - round(z.real)) < 0.05:
            continue
        if not (_pole_safe(z) and _pole_safe(1 - z)):
            continue
        product = gamma(z) * gamma(1 - z)
        reference = math.pi / sin_pi(z)
        assert abs(product - reference) / abs(reference) <= 1e-12
        checked += 1


def test_conjugate_symmetry(rng):
    checked = 0
    while checked < 500:
        z = random_complex(rng, 20.0)
        if not _pole_safe(z):
            continue
        a, b = gamma(z.conjugate()), gamma(z).conjugate()
        assert abs(a - b) / abs(b) <= 1e-13
        checked += 1


def test_strip_product_real_positive():
    for k in range(101):
        y = 0.1 * k
        value = gamma(0.5 + 1j * y) * gamma(0.5 - 1j * y)
        assert abs(value.imag) <= 1e-12 * max(1.0, abs(value))
        assert value.real > 0.0
