"""
Tests for the F_a family
"""

import cmath

import numpy as np
import pytest
from hypothesis import assume, given, settings
import hypothesis.strategies as st
from scipy.special import hyp2f1

from src.errors import ConvergenceError, DomainError
from src.hypergeom import HypergeomParams, _gauss_sum, f_a_series, f_a_value, f_a_values, identity_residual

a_values = st.floats(min_value=0.0, max_value=1.0)


def test_value_at_origin():
    assert f_a_value(HypergeomParams(a=0.3), 0.0) == 1.0


def test_first_coefficient():
    for a in (0.0, 0.25, 1 / 6, 0.9):
        series = f_a_series(HypergeomParams(a=a), order=4)
        assert series[0] == 1.0
        assert series[1].real == pytest.approx(0.5 - 2 * a * a)


def test_classical_case_is_inverse_square_root():
    p = HypergeomParams(a=0.0)
    z = np.array([0.1, -0.5, 0.7, 0.3 + 0.2j])
    np.testing.assert_allclose(f_a_values(p, z), 1 / np.sqrt(1 - z), rtol=1e-14)


def test_half_is_identically_one():
    np.testing.assert_allclose(f_a_values(HypergeomParams(a=0.5), [0.2, -0.9, 0.5j]), 1.0)


@pytest.mark.parametrize("a", [0.1, 0.25, 1 / 6, 0.75])
@pytest.mark.parametrize("z", [0.2, -0.6, 0.85])
def test_matches_scipy(a, z):
    assert f_a_value(HypergeomParams(a=a), z).real == pytest.approx(hyp2f1(0.5 - a, 0.5 + a, 0.5, z), rel=1e-13)


@settings(max_examples=100, deadline=None)
@given(a_values, st.floats(min_value=-1.0, max_value=1.0), st.floats(min_value=-0.3, max_value=0.3))
def test_closed_form_identity(a, x, y):
    z = complex(x, y)
    assume(abs(cmath.sin(z) ** 2) < 0.95)
    assume(abs(cmath.cos(z)) > 0.1)
    assert identity_residual(HypergeomParams(a=a), z) < 1e-10


@settings(max_examples=50, deadline=None)
@given(a_values, st.floats(min_value=-0.9, max_value=0.9))
def test_even_in_a(a, z):
    forward = _gauss_sum(0.5 - a, 0.5 + a, 0.5, np.array([z]), 1e-16, 10000)
    swapped = _gauss_sum(0.5 + a, 0.5 - a, 0.5, np.array([z]), 1e-16, 10000)
    np.testing.assert_allclose(forward, swapped, rtol=1e-13)


def test_series_agrees_with_summation():
    p = HypergeomParams(a=0.2, series_order=60)
    z = 0.3
    assert f_a_series(p).evaluate(z).real == pytest.approx(f_a_value(p, z).real, rel=1e-14)


def test_outside_unit_disk():
    p = HypergeomParams(a=0.2)
    with pytest.raises(DomainError):
        f_a_value(p, 1.0)
    with pytest.raises(DomainError):
        f_a_values(p, [0.1, 1.5j])


def test_parameter_range():
    with pytest.raises(DomainError):
        HypergeomParams(a=1.5)
    with pytest.raises(DomainError):
        HypergeomParams(a=-0.1)


def test_summation_term_limit():
    with pytest.raises(ConvergenceError):
        f_a_value(HypergeomParams(a=0.1, max_terms=2), 0.5)
