import math

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st
from numpy.polynomial import hermite as np_hermite
from scipy.special import eval_genlaguerre, eval_laguerre

from csecs.models.special_functions import (
    TAU_SWITCH, assoc_laguerre, bilinear_derivative, gaussian_coefficient,
    hermite, laguerre, ln_factorial
)


def test_hermite_low_orders():
    assert hermite(0, 0.3) == 1
    assert hermite(1, 0.3) == pytest.approx(0.6)
    assert hermite(2, 0.3) == pytest.approx(4 * 0.09 - 2)
    assert hermite(3, 1j) == pytest.approx(8 * (1j) ** 3 - 12j)


def test_hermite_rejects_negative_order():
    with pytest.raises(ValueError):
        hermite(-1, 0.5)


@given(st.integers(0, 8), st.floats(-2, 2), st.floats(-2, 2))
def test_hermite_matches_numpy(n, x, y):
    z = complex(x, y)
    coefficients = [0] * n + [1]
    expected = np_hermite.hermval(z, coefficients)
    assert hermite(n, z) == pytest.approx(expected, rel=1e-9, abs=1e-7)


def test_laguerre_known_values():
    assert laguerre(0, 2.0) == 1
    assert laguerre(1, 2.0) == pytest.approx(-1.0)
    assert laguerre(2, 1.0) == pytest.approx(-0.5)
    assert laguerre(3, -1.0) == pytest.approx(1 + 3 + 1.5 + 1 / 6)


@given(st.integers(0, 15), st.floats(-5, 5))
def test_laguerre_matches_scipy(n, x):
    assert laguerre(n, x) == pytest.approx(eval_laguerre(n, x), rel=1e-8, abs=1e-8)


@given(st.integers(0, 10), st.integers(0, 10), st.floats(0, 6))
def test_assoc_laguerre_matches_scipy(n, k, x):
    assert assoc_laguerre(n, k, x) == pytest.approx(eval_genlaguerre(n, k, x), rel=1e-8, abs=1e-7)


def test_ln_factorial():
    assert ln_factorial(0) == 0.0
    assert ln_factorial(1) == 0.0
    assert ln_factorial(5) == pytest.approx(math.log(120))
    assert ln_factorial(170) == pytest.approx(math.lgamma(171))
    with pytest.raises(ValueError):
        ln_factorial(-1)


def test_gaussian_coefficient_pure_exponential():
    # d = 0: a^p / p!
    assert gaussian_coefficient(2.0, 0.0, 3) == pytest.approx(8 / 6)
    assert gaussian_coefficient(2.0, 0.0, -1) == 0


def test_gaussian_coefficient_pure_gaussian():
    # exp(d x^2) has d^k/k! at x^2k and nothing at odd powers
    assert gaussian_coefficient(0.0, 0.5, 4) == pytest.approx(0.125)
    assert gaussian_coefficient(0.0, 0.5, 3) == pytest.approx(0.0, abs=1e-15)


@given(st.complex_numbers(max_magnitude=3), st.floats(1e-4, 2), st.integers(0, 8))
@settings(max_examples=200)
def test_gaussian_coefficient_branches_agree(a, d, p):
    hermite_branch = gaussian_coefficient(a, d, p, tau_switch=0.0)
    series_branch = gaussian_coefficient(a, d, p, tau_switch=math.inf)
    assert hermite_branch == pytest.approx(series_branch, rel=1e-9, abs=1e-10)


def test_bilinear_derivative_low_orders():
    a, b, c, d = 0.3 + 0.1j, -0.2j, 0.5, 0.25
    assert bilinear_derivative(a, b, c, d, 0) == pytest.approx(1)
    assert bilinear_derivative(a, b, c, d, 1) == pytest.approx(a * b + c)


def test_bilinear_derivative_second_order_by_hand():
    # d^2/ds^2 d^2/dtau^2 exp(a s + b tau + c s tau + d (s^2 + tau^2)) at 0
    a, b, c, d = 0.7, -0.4, 0.3, 0.2
    expected = (a * a + 2 * d) * (b * b + 2 * d) + 4 * a * b * c + 2 * c * c
    assert bilinear_derivative(a, b, c, d, 2) == pytest.approx(expected)


@pytest.mark.parametrize('d', [TAU_SWITCH * 0.4, TAU_SWITCH * 0.6])
def test_bilinear_derivative_continuous_at_switch(d):
    # |2d| straddles the switch for these two values
    args = (0.8 + 0.2j, 0.8 - 0.2j, 0.5, d)
    below = bilinear_derivative(*args, order=2)
    above = bilinear_derivative(*args, order=2, tau_switch=0.0)
    assert below == pytest.approx(above, rel=1e-9)


def test_worked_examples():
    assert hermite(3, 2 + 0j) == pytest.approx(40)
    assert laguerre(2, 2.0) == pytest.approx(-1.0)
    assert assoc_laguerre(1, 1, 1.0) == pytest.approx(1.0)
    assert ln_factorial(10) == pytest.approx(math.log(3628800), rel=1e-12)


@given(st.integers(0, 20), st.floats(-3, 3), st.floats(-3, 3))
def test_hermite_parity(n, x, y):
    z = complex(x, y)
    assert hermite(n, -z) == pytest.approx((-1) ** n * hermite(n, z), rel=1e-12, abs=1e-9)


@given(st.integers(1, 29), st.floats(0, 5), st.floats(0, 2 * math.pi))
@settings(max_examples=80)
def test_hermite_recurrence_residual(n, radius, angle):
    z = radius * complex(math.cos(angle), math.sin(angle))
    upper, middle, lower = hermite(n + 1, z), hermite(n, z), hermite(n - 1, z)
    scale = max(1.0, abs(upper), abs(2 * z * middle), abs(2 * n * lower))
    assert abs(upper - 2 * z * middle + 2 * n * lower) <= 1e-12 * scale


def test_laguerre_at_origin():
    for n in range(51):
        assert laguerre(n, 0.0) == pytest.approx(1.0, abs=1e-12)


def test_laguerre_generating_function():
    # sum_n L_n(x) t^n = exp(-t x / (1 - t)) / (1 - t)
    t, x = 0.3, 1.5
    series = sum(laguerre(n, x) * t ** n for n in range(61))
    assert series == pytest.approx(math.exp(-t * x / (1 - t)) / (1 - t), abs=1e-8)


def test_order_64_stays_finite():
    assert math.isfinite(abs(hermite(64, 1.0 + 0j)))
    assert math.isfinite(abs(hermite(64, 5 + 5j)))
    assert math.isfinite(laguerre(64, 2.0))
    assert math.isfinite(assoc_laguerre(64, 3, 2.0))
    assert ln_factorial(64) == pytest.approx(math.lgamma(65), rel=1e-12)
