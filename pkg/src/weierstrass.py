"""
Weierstrass p near its pole at the origin, and the signature 3 and 4
closed forms built from it
"""

import cmath
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Tuple

import numpy as np

from config import Config
from .chebyshev import RationalPoly
from .errors import DomainError
from .series_core import TruncatedSeries, ps_diff, ps_eval, ps_mul

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WeierstrassInvariants:
    """Invariants (g2, g3) of (p')^2 = 4p^3 - g2 p - g3"""

    g2: float
    g3: float

    @property
    def modular_discriminant(self) -> float:
        return self.g2 ** 3 - 27.0 * self.g3 ** 2

    def require_nondegenerate(self) -> 'WeierstrassInvariants':
        if self.modular_discriminant == 0.0:
            raise DomainError(f"degenerate invariants g2={self.g2}, g3={self.g3}: g2^3 - 27 g3^2 = 0")
        return self


@lru_cache(maxsize=128)
def _laurent_coefficients(g2: float, g3: float, terms: int) -> Tuple[float, ...]:
    """c_2 .. c_terms of p(z) = 1/z^2 + sum c_k z^(2k-2)"""
    c = {2: g2 / 20.0, 3: g3 / 28.0}
    for k in range(4, terms + 1):
        total = sum(c[i] * c[k - i] for i in range(2, k - 1))
        c[k] = 3.0 * total / ((2 * k + 1) * (k - 3))
    return tuple(c[k] for k in range(2, terms + 1))


def wp_series(inv: WeierstrassInvariants, order: int = Config.WP_TERMS) -> TruncatedSeries:
    """
    Taylor series of p(z) - 1/z^2

    Args:
        inv: Invariants g2, g3
        order: Number of Laurent coefficients c_2 .. c_order to keep

    Returns:
        Even series in z of degree 2*order - 2
    """
    if order < 2:
        raise DomainError(f"Weierstrass expansion needs at least 2 terms, got {order}")
    coeffs = np.zeros(2 * order - 1)
    for k, value in enumerate(_laurent_coefficients(inv.g2, inv.g3, order), start=2):
        coeffs[2 * k - 2] = value
    return TruncatedSeries(coeffs)


def wp_trusted_radius(inv: WeierstrassInvariants, terms: int = Config.WP_TERMS,
                      tail_tol: float = Config.RADIUS_TAIL_TOL,
                      cap: float = Config.WP_RADIUS_CAP) -> float:
    """Largest |z| where the last two retained Laurent terms are below tail_tol"""
    coefficients = _laurent_coefficients(inv.g2, inv.g3, max(terms, 3))
    radius = cap
    for k in (len(coefficients), len(coefficients) + 1):
        magnitude = abs(coefficients[k - 2])
        if magnitude > 0:
            radius = min(radius, (tail_tol / magnitude) ** (1.0 / (2 * k - 2)))
    return radius


def _check_radius(inv: WeierstrassInvariants, z: complex, terms: int):
    radius = wp_trusted_radius(inv, terms)
    if abs(z) > radius:
        raise DomainError(f"|z| = {abs(z):.6g} exceeds the trusted radius {radius:.6g} of p")


def _pole_cleared(inv: WeierstrassInvariants, z: complex, terms: int) -> Tuple[complex, complex]:
    """P = z^2 p(z) and Q = z^3 p'(z), both regular at the origin with P(0) = 1, Q(0) = -2"""
    _check_radius(inv, z, terms)
    z = complex(z)
    tail = wp_series(inv, terms)
    P = 1.0 + z * z * ps_eval(tail, z)
    Q = -2.0 + z * z * z * ps_eval(ps_diff(tail), z)
    return P, Q


def _divide_by_power(value: complex, z: complex, power: int) -> complex:
    try:
        result = value / complex(z) ** power
    except (ZeroDivisionError, OverflowError):
        result = complex('inf')
    if not cmath.isfinite(result):
        raise DomainError(f"p is not representable at z = {z}: too close to the pole at 0")
    return result


def wp_eval(inv: WeierstrassInvariants, z: complex, terms: int = Config.WP_TERMS) -> complex:
    if z == 0:
        raise DomainError("p has a double pole at z = 0")
    P, _ = _pole_cleared(inv, z, terms)
    return _divide_by_power(P, z, 2)


def wp_prime_eval(inv: WeierstrassInvariants, z: complex, terms: int = Config.WP_TERMS) -> complex:
    if z == 0:
        raise DomainError("p' has a triple pole at z = 0")
    _, Q = _pole_cleared(inv, z, terms)
    return _divide_by_power(Q, z, 3)


def wp_ode_residual_series(inv: WeierstrassInvariants, terms: int = Config.WP_TERMS) -> TruncatedSeries:
    """
    z^6 [(p')^2 - 4p^3 + g2 p + g3] as a Taylor series

    With P = z^2 p and Q = z^3 p' both known through degree 2*terms + 1, the
    residual must vanish through that degree.
    """
    tail = wp_series(inv, terms).coeffs
    order = 2 * terms + 1
    p_coeffs = np.zeros(order + 1, dtype=complex)
    p_coeffs[0] = 1.0
    p_coeffs[2:2 + tail.size] = tail
    q_coeffs = np.zeros(order + 1, dtype=complex)
    q_coeffs[0] = -2.0
    slope = tail[1:] * np.arange(1, tail.size)
    q_coeffs[3:3 + slope.size] = slope
    P = TruncatedSeries(p_coeffs)
    Q = TruncatedSeries(q_coeffs)
    z4_p = TruncatedSeries(np.concatenate(([0.0] * 4, p_coeffs[:order - 3])))
    z6 = TruncatedSeries(np.eye(1, order + 1, 6)[0])
    return ps_mul(Q, Q) - 4.0 * ps_mul(P, ps_mul(P, P)) + inv.g2 * z4_p + inv.g3 * z6


def wp_ode_pointwise_residual(inv: WeierstrassInvariants, z: complex,
                              terms: int = Config.WP_TERMS) -> float:
    """
    |(p')^2 - 4p^3 + g2 p + g3| relative to max(1, |p'|^2)

    Computed after multiplying through by z^6, so points near the pole stay finite.
    """
    if z == 0:
        raise DomainError("p has a double pole at z = 0")
    P, Q = _pole_cleared(inv, z, terms)
    z = complex(z)
    z2 = z * z
    cleared = Q * Q - 4.0 * P ** 3 + inv.g2 * z2 * z2 * P + inv.g3 * z2 ** 3
    return float(abs(cleared) / max(abs(z2) ** 3, abs(Q) ** 2))


def _check_kappa(kappa: float):
    if not 0.0 < kappa < 1.0:
        raise DomainError(f"kappa must lie in (0,1), got {kappa}")


# ---- signature 4: a = 1/4 ----

def sig4_invariants(kappa: float) -> WeierstrassInvariants:
    """g2 = 4/3 - kappa^2, g3 = 8/27 - kappa^2/3"""
    _check_kappa(kappa)
    k2 = kappa * kappa
    return WeierstrassInvariants(4.0 / 3.0 - k2, 8.0 / 27.0 - k2 / 3.0).require_nondegenerate()


def sig4_invariants_exact(kappa: float) -> Tuple[Fraction, Fraction]:
    """The same invariants in exact arithmetic for the binary value of kappa"""
    _check_kappa(kappa)
    k2 = Fraction(kappa) ** 2
    return Fraction(4, 3) - k2, Fraction(8, 27) - k2 / 3


def weierstrass_cubic(g2: Fraction, g3: Fraction) -> RationalPoly:
    """4t^3 - g2 t - g3"""
    return RationalPoly([-g3, -g2, 0, 4])


def sig4_midpoint_values(kappa: float) -> Tuple[float, float, float]:
    """Roots -1/3 and 1/6 +- lambda/2 of the signature 4 cubic"""
    _check_kappa(kappa)
    lam = float(np.sqrt((1.0 - kappa) * (1.0 + kappa)))
    return -1.0 / 3.0, 1.0 / 6.0 + lam / 2.0, 1.0 / 6.0 - lam / 2.0


def _shifted_pole_cleared(inv: WeierstrassInvariants, u: complex,
                          terms: int) -> Tuple[complex, complex, complex]:
    """z^2, z^2 (p + 1/3) and z^3 p', finite down to u = 0"""
    P, Q = _pole_cleared(inv, u, terms)
    z = complex(u)
    z2 = z * z
    return z2, P + z2 / 3.0, Q


def sig4_d_closed(kappa: float, u: complex, terms: int = Config.WP_TERMS) -> complex:
    """d = 1 - (kappa^2/2) / (p + 1/3)"""
    _check_kappa(kappa)
    z2, shifted, _ = _shifted_pole_cleared(sig4_invariants(kappa), u, terms)
    return 1.0 - 0.5 * kappa * kappa * z2 / shifted


def sig4_c2_closed(kappa: float, u: complex, terms: int = Config.WP_TERMS) -> complex:
    """c^2 = (p')^2 / (4 (p + 1/3)^3)"""
    _check_kappa(kappa)
    _, shifted, Q = _shifted_pole_cleared(sig4_invariants(kappa), u, terms)
    return 0.25 * Q * Q / shifted ** 3


# ---- signature 3: a = 1/6 ----

def sig3_invariants(kappa: float) -> WeierstrassInvariants:
    """g2 = 4(9 - 8 kappa^2)/27, g3 = 8(8 kappa^4 - 36 kappa^2 + 27)/729"""
    _check_kappa(kappa)
    k2 = kappa * kappa
    g2 = 4.0 * (9.0 - 8.0 * k2) / 27.0
    g3 = 8.0 * (8.0 * k2 * k2 - 36.0 * k2 + 27.0) / 729.0
    return WeierstrassInvariants(g2, g3).require_nondegenerate()


def sig3_dn3_closed(kappa: float, u: complex, terms: int = Config.WP_TERMS) -> complex:
    """dn_3 = 1 - (4 kappa^2 / 9) / (p + 1/3)"""
    _check_kappa(kappa)
    z2, shifted, _ = _shifted_pole_cleared(sig3_invariants(kappa), u, terms)
    return 1.0 - (4.0 * kappa * kappa / 9.0) * z2 / shifted
