"""
The hypergeometric family F_a(z) = F(1/2 - a, 1/2 + a; 1/2; z)
"""

import logging
from dataclasses import dataclass
from typing import Union

import numpy as np

from config import Config
from .errors import ConvergenceError, DomainError
from .series_core import TruncatedSeries

logger = logging.getLogger(__name__)

# Consecutive small terms required before the Gauss sum is accepted
_SMALL_TERMS_TO_STOP = 3


@dataclass(frozen=True)
class HypergeomParams:
    """Parameter a of F_a plus summation controls"""

    a: float
    series_order: int = Config.SERIES_ORDER
    tol: float = Config.HYPERGEOM_TOL
    max_terms: int = Config.HYPERGEOM_MAX_TERMS

    def __post_init__(self):
        if not 0.0 <= float(self.a) <= 1.0:
            raise DomainError(f"a must lie in [0, 1], got {self.a}")
        if self.series_order < 0:
            raise DomainError(f"series order cannot be negative: {self.series_order}")

    @property
    def upper(self):
        """Upper parameters (1/2 - a, 1/2 + a)"""
        a = float(self.a)
        return 0.5 - a, 0.5 + a


def _gauss_sum(alpha: float, beta: float, gamma: float, z: np.ndarray,
               tol: float, max_terms: int) -> np.ndarray:
    """Vectorized Gauss series with Pochhammer ratios accumulated term by term"""
    z = np.asarray(z, dtype=complex)
    total = np.ones_like(z)
    term = np.ones_like(z)
    quiet = np.zeros(z.shape, dtype=int)
    for k in range(max_terms):
        term = term * ((alpha + k) * (beta + k) / ((gamma + k) * (k + 1))) * z
        total = total + term
        small = np.abs(term) <= tol * np.abs(total)
        quiet = np.where(small, quiet + 1, 0)
        if np.all(quiet >= _SMALL_TERMS_TO_STOP):
            logger.debug(f"Gauss series converged after {k + 1} terms")
            return total
    raise ConvergenceError(f"Gauss series did not reach tol={tol} within {max_terms} terms")


def f_a_values(p: HypergeomParams, z: Union[np.ndarray, list]) -> np.ndarray:
    """F_a at every point of an array inside the unit disk"""
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("F_a is only evaluated inside the unit disk |z| < 1")
    alpha, beta = p.upper
    return _gauss_sum(alpha, beta, 0.5, z, p.tol, p.max_terms)


def f_a_value(p: HypergeomParams, z: complex) -> complex:
    """
    Sum the Gauss series of F_a at one point

    Args:
        p: Parameter bundle
        z: Argument with |z| < 1

    Returns:
        Complex value of F_a(z)
    """
    if abs(z) >= 1.0:
        raise DomainError(f"|z| = {abs(z)} lies outside the convergence disk of F_a")
    return complex(f_a_values(p, np.array([z]))[0])


def f_a_series(p: HypergeomParams, order: int = None) -> TruncatedSeries:
    """Maclaurin coefficients of F_a in z"""
    order = p.series_order if order is None else order
    if order < 0:
        raise DomainError(f"order cannot be negative: {order}")
    alpha, beta = p.upper
    coeffs = np.ones(order + 1)
    for k in range(order):
        coeffs[k + 1] = coeffs[k] * (alpha + k) * (beta + k) / ((0.5 + k) * (k + 1))
    return TruncatedSeries(coeffs)


def identity_residual(p: HypergeomParams, z: complex) -> float:
    """|F_a(sin^2 z) - cos(2az)/cos(z)|"""
    cos_z = np.cos(complex(z))
    if abs(cos_z) < 1e-300:
        raise DomainError(f"cos(z) vanishes at z = {z}: pole of cos(2az)/cos(z)")
    lhs = f_a_value(p, np.sin(complex(z)) ** 2)
    rhs = np.cos(2 * float(p.a) * complex(z)) / cos_z
    return float(abs(lhs - rhs))
