"""Airy function evaluator and the Airy kernel."""

import math

import numpy as np
import pytest
import scipy.special

from tschur.airy import AI_MAX, AI_MIN, airy_ai, airy_ai_prime, airy_kernel


def test_value_at_zero():
    # Ai(0) = 3^{-2/3}/Gamma(2/3), Ai'(0) = -3^{-1/3}/Gamma(1/3)
    assert math.isclose(airy_ai(0.0), 3 ** (-2 / 3) / math.gamma(2 / 3), rel_tol=1e-14)
    assert math.isclose(
        airy_ai_prime(0.0), -(3 ** (-1 / 3)) / math.gamma(1 / 3), rel_tol=1e-14
    )


def test_against_scipy_oracle():
    xs = np.linspace(-40, 60, 1501)
    ai, aip, _, _ = scipy.special.airy(xs)
    np.testing.assert_allclose(airy_ai(xs), ai, rtol=1e-11, atol=1e-300)
    np.testing.assert_allclose(airy_ai_prime(xs), aip, rtol=1e-11, atol=1e-300)


def test_region_boundaries_are_seamless():
    # the series/asymptotic handoff at |x| = 9 must not jump beyond what the
    # local slope of Ai explains
    for edge in (-9.0, 9.0):
        eps = 1e-9
        left = airy_ai(edge - eps)
        right = airy_ai(edge + eps)
        slope = abs(airy_ai_prime(edge))
        assert abs(left - right) < 2 * eps * slope + 1e-12 * abs(left)


def test_scalar_and_array_interfaces():
    assert isinstance(airy_ai(1.0), float)
    out = airy_ai(np.array([0.0, 1.0]))
    assert out.shape == (2,)


def test_range_enforcement():
    with pytest.raises(ValueError):
        airy_ai(AI_MIN - 1)
    with pytest.raises(ValueError):
        airy_ai(AI_MAX + 1)


def test_ode_residual():
    # Ai'' = x Ai via five-point central differences on Ai'
    for x in (-5.0, -1.0, 0.5, 3.0, 8.0):
        h = 1e-3
        d2 = (
            -airy_ai(x + 2 * h) + 16 * airy_ai(x + h) - 30 * airy_ai(x)
            + 16 * airy_ai(x - h) - airy_ai(x - 2 * h)
        ) / (12 * h * h)
        assert abs(d2 - x * airy_ai(x)) < 5e-9


def test_kernel_symmetry_and_diagonal():
    # K(x,x) = Ai'(x)^2 - x Ai(x)^2
    for x, y in ((0.0, 1.0), (-2.0, 0.5), (1.5, 1.5)):
        assert math.isclose(airy_kernel(x, y), airy_kernel(y, x), rel_tol=1e-12)
    for x in (-2.0, 0.0, 1.0, 3.0):
        diag = airy_ai_prime(x) ** 2 - x * airy_ai(x) ** 2
        assert abs(airy_kernel(x, x) - diag) < 1e-13


def test_kernel_decay():
    assert airy_kernel(8.0, 8.0) < 1e-10
