"""
Tests for the modified Bessel functions K_0 and K_1.
"""

import numpy as np
import pytest

from numerics.specfun import bessel_k0, bessel_k0_k1, bessel_k1
from utils.exceptions import DomainError

from .oracle import k0, k1

ARGUMENTS = (1e-8, 1e-4, 1e-2, 0.1, 0.5, 1.0, 1.5, 1.999, 2.0, 2.001, 3.0, 5.0,
             10.0, 30.0, 100.0, 300.0)


@pytest.mark.parametrize('z', ARGUMENTS)
def test_k0_matches_high_precision(z):
    assert bessel_k0(z) == pytest.approx(k0(z), rel=1e-12)


@pytest.mark.parametrize('z', ARGUMENTS)
def test_k1_matches_high_precision(z):
    assert bessel_k1(z) == pytest.approx(k1(z), rel=1e-12)


def test_tabulated_values():
    k0_1, k1_1 = bessel_k0_k1(1.0)
    assert k0_1 == pytest.approx(0.42102443824070834, rel=1e-14)
    assert k1_1 == pytest.approx(0.60190723019723457, rel=1e-14)


def test_scalar_input_gives_floats():
    k0_value, k1_value = bessel_k0_k1(0.7)
    assert isinstance(k0_value, float)
    assert isinstance(k1_value, float)


def test_array_input_keeps_shape():
    z = np.array([[0.5, 1.0, 2.5], [4.0, 8.0, 16.0]])
    k0_values, k1_values = bessel_k0_k1(z)
    assert k0_values.shape == z.shape
    assert k1_values.shape == z.shape
    for value, arg in zip(k0_values.ravel(), z.ravel()):
        assert value == pytest.approx(k0(arg), rel=1e-12)


def test_branches_meet_at_two():
    below = bessel_k0_k1(np.nextafter(2.0, 0.0))
    above = bessel_k0_k1(np.nextafter(2.0, 3.0))
    assert below[0] == pytest.approx(above[0], rel=1e-13)
    assert below[1] == pytest.approx(above[1], rel=1e-13)


def test_monotone_decay():
    z = np.geomspace(1e-3, 50.0, 200)
    k0_values, k1_values = bessel_k0_k1(z)
    assert np.all(np.diff(k0_values) < 0)
    assert np.all(np.diff(k1_values) < 0)
    assert np.all(k1_values > k0_values)


@pytest.mark.parametrize('z', (0.0, -1.0))
def test_nonpositive_argument_is_rejected(z):
    with pytest.raises(DomainError):
        bessel_k0_k1(z)


def test_nonpositive_entry_in_array_is_rejected():
    with pytest.raises(DomainError):
        bessel_k0(np.array([1.0, 0.0]))


@pytest.mark.parametrize('z, expected', [
    (0.5, 1.6564411200033008),
    (1.0, 0.6019072301972346),
    (2.0, 0.13986588181652243),
])
def test_k1_on_series_branch(z, expected):
    assert bessel_k1(z) == pytest.approx(expected, rel=1e-10)
