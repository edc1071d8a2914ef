import math

import numpy as np
import pytest
from scipy.special import ellipj, ellipk

from src.classical import agm, complete_k, jacobi_amplitude, jacobi_sn_cn_dn
from src.errors import DomainError


def test_agm_gauss_constant():
    assert agm(1.0, math.sqrt(2.0)) == pytest.approx(1.1981402347355922, rel=1e-15)


@pytest.mark.parametrize("kappa", [0.0, 0.3, 0.8, 0.95])
def test_complete_integral(kappa):
    assert complete_k(kappa) == pytest.approx(ellipk(kappa ** 2), rel=1e-14)


@pytest.mark.parametrize("kappa", [0.3, 0.6, 0.8, 0.95])
@pytest.mark.parametrize("u", [-1.2, -0.3, 0.05, 0.25, 0.9, 2.0])
def test_against_scipy(kappa, u):
    sn, cn, dn, am = ellipj(u, kappa ** 2)
    ours = jacobi_sn_cn_dn(u, kappa)
    np.testing.assert_allclose(ours, (sn, cn, dn), atol=1e-12)
    assert jacobi_amplitude(u, kappa) == pytest.approx(am, abs=1e-12)


def test_zero_modulus_is_trigonometric():
    sn, cn, dn = jacobi_sn_cn_dn(0.7, 0.0)
    assert (sn, cn, dn) == pytest.approx((math.sin(0.7), math.cos(0.7), 1.0))


@pytest.mark.parametrize("u", np.linspace(-1.5, 1.5, 7))
def test_quadratic_relations(u):
    kappa = 0.8
    sn, cn, dn = jacobi_sn_cn_dn(u, kappa)
    assert sn ** 2 + cn ** 2 == pytest.approx(1.0, abs=1e-14)
    assert dn ** 2 + kappa ** 2 * sn ** 2 == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("kappa", [-0.1, 1.0, 1.5])
def test_modulus_range(kappa):
    with pytest.raises(DomainError):
        jacobi_sn_cn_dn(0.1, kappa)
