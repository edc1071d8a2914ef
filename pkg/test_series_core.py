"""
Tests for truncated power series arithmetic
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from src.errors import DomainError
from src.series_core import (
    TruncatedSeries,
    ps_compose,
    ps_diff,
    ps_elem,
    ps_eval,
    ps_integrate,
    ps_mul,
    ps_polyval,
    ps_reciprocal,
    ps_revert,
)

coefficient = st.floats(min_value=-1.0, max_value=1.0, allow_nan=False, allow_infinity=False)


def test_constructor_pads_and_truncates():
    assert TruncatedSeries([1, 2], order=4).coeffs.tolist() == [1, 2, 0, 0, 0]
    assert TruncatedSeries([1, 2, 3, 4], order=1).coeffs.tolist() == [1, 2]
    assert TruncatedSeries.identity(3).coeffs.tolist() == [0, 1, 0, 0]


def test_coefficients_are_read_only():
    series = TruncatedSeries([1.0, 2.0])
    with pytest.raises(ValueError):
        series.coeffs[0] = 5.0


def test_rejects_non_finite_coefficients():
    with pytest.raises(DomainError):
        TruncatedSeries([1.0, float('nan')])
    with pytest.raises(DomainError):
        TruncatedSeries([])


def test_binary_operations_use_the_smaller_order():
    x = TruncatedSeries([1, 1, 1, 1, 1])
    y = TruncatedSeries([1, 1])
    assert (x + y).order == 1
    assert ps_mul(x, y).order == 1


def test_scalar_arithmetic():
    t = TruncatedSeries.identity(3)
    assert (1 - t).coeffs.tolist() == [1, -1, 0, 0]
    assert (2.0 * t + 3).coeffs.tolist() == [3, 2, 0, 0]
    assert (t / 2).coeffs.tolist() == [0, 0.5, 0, 0]


def test_reciprocal_of_one_minus_t_is_geometric():
    geometric = 1.0 / (1 - TruncatedSeries.identity(6))
    np.testing.assert_allclose(geometric.coeffs, np.ones(7))


def test_reciprocal_needs_nonzero_constant_term():
    with pytest.raises(DomainError):
        ps_reciprocal(TruncatedSeries.identity(4))


def test_negative_power_matches_reciprocal():
    x = 1 + TruncatedSeries.identity(5)
    np.testing.assert_allclose((x ** -2).coeffs, ps_reciprocal(x * x).coeffs)


def test_compose_requires_vanishing_inner_constant():
    with pytest.raises(DomainError):
        ps_compose(ps_elem('exp', 4), TruncatedSeries([1.0, 1.0], order=4))


def test_pythagorean_identity_of_elementary_series():
    s, c = ps_elem('sin', 20), ps_elem('cos', 20)
    np.testing.assert_allclose((s * s + c * c).coeffs, np.eye(1, 21)[0], atol=1e-15)


def test_sqrt1p_squares_to_one_plus_t():
    root = ps_elem('sqrt1p', 12)
    np.testing.assert_allclose((root * root).coeffs, [1, 1] + [0] * 11, atol=1e-15)


def test_arcsin_composed_with_sin_is_identity():
    order = 15
    inner = ps_compose(ps_elem('arcsin', order), ps_elem('sin', order))
    np.testing.assert_allclose(inner.coeffs, TruncatedSeries.identity(order).coeffs, atol=1e-14)


def test_unknown_elementary_kind():
    with pytest.raises(DomainError):
        ps_elem('tan', 5)


def test_revert_sin_gives_arcsin():
    np.testing.assert_allclose(ps_revert(ps_elem('sin', 25)).coeffs, ps_elem('arcsin', 25).coeffs,
                               atol=1e-14)


def test_revert_requires_simple_zero():
    with pytest.raises(DomainError):
        ps_revert(TruncatedSeries([0.0, 0.0, 1.0]))
    with pytest.raises(DomainError):
        ps_revert(TruncatedSeries([1.0, 1.0, 1.0]))


@settings(max_examples=50, deadline=None)
@given(st.floats(min_value=0.8, max_value=1.5), st.lists(st.floats(min_value=-0.2, max_value=0.2),
                                                         min_size=7, max_size=7))
def test_revert_is_a_compositional_inverse(slope, tail):
    x = TruncatedSeries([0.0, slope] + tail)
    y = ps_revert(x)
    identity = TruncatedSeries.identity(x.order)
    assert np.max(np.abs((ps_compose(x, y) - identity).coeffs)) < 1e-12
    assert np.max(np.abs((ps_compose(y, x) - identity).coeffs)) < 1e-12


@settings(max_examples=50, deadline=None)
@given(st.lists(coefficient, min_size=9, max_size=9), st.lists(coefficient, min_size=9, max_size=9))
def test_leibniz_rule(left, right):
    x, y = TruncatedSeries(left), TruncatedSeries(right)
    lhs = ps_diff(x * y)
    rhs = ps_diff(x) * y + x * ps_diff(y)
    np.testing.assert_allclose(lhs.coeffs, rhs.coeffs[:lhs.order + 1], atol=1e-13)


@given(st.lists(coefficient, min_size=1, max_size=12))
def test_integrate_then_diff_is_identity(coeffs):
    x = TruncatedSeries(coeffs)
    back = ps_diff(ps_integrate(x))
    assert back.order == x.order
    np.testing.assert_allclose(back.coeffs, x.coeffs, atol=1e-15)


def test_diff_of_constant_order_zero():
    assert ps_diff(TruncatedSeries([3.0])).coeffs.tolist() == [0]


def test_polyval_and_eval():
    t = TruncatedSeries.identity(4)
    squared_plus_one = ps_polyval([1, 0, 1], t)
    assert squared_plus_one.coeffs.tolist() == [1, 0, 1, 0, 0]
    assert ps_eval(ps_elem('exp', 25), 0.3) == pytest.approx(math.exp(0.3), rel=1e-15)
    assert ps_eval(ps_elem('sin', 25), 0.2j) == pytest.approx(1j * math.sinh(0.2), rel=1e-15)


def test_truncate_cannot_extend():
    with pytest.raises(DomainError):
        TruncatedSeries([1.0, 2.0]).truncate(5)


def test_product_truncates_to_shared_order():
    product = ps_mul(TruncatedSeries([1.0, 1.0, 1.0]), TruncatedSeries([1.0, -1.0, 0.0]))
    assert product.coeffs.tolist() == [1, 0, 0]
    untruncated = TruncatedSeries([1.0, 1.0, 1.0], order=3) * TruncatedSeries([1.0, -1.0], order=3)
    assert untruncated.coeffs.tolist() == [1, 0, 0, -1]


def test_revert_catalan_signs():
    t = TruncatedSeries.identity(4)
    np.testing.assert_allclose(ps_revert(t + t * t).coeffs, [0, 1, -1, 2, -5], atol=1e-15)
    np.testing.assert_allclose(ps_revert(2.0 * t).coeffs, [0, 0.5, 0, 0, 0], atol=1e-15)


def test_exp_of_t_plus_t_squared():
    t = TruncatedSeries.identity(3)
    composed = ps_compose(ps_elem('exp', 3), t + t * t)
    np.testing.assert_allclose(composed.coeffs, [1, 1, 1.5, 7 / 6], atol=1e-15)
