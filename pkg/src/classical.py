"""
Classical Jacobian elliptic functions by the arithmetic-geometric mean

Independent of the series engine: these values anchor the a = 0 case of the
analogue construction.
"""

import math
import logging
from typing import List, Tuple

from .errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

_AGM_TOL = 1e-16
_AGM_REL_GAP = 1e-15
_AGM_MAX_STEPS = 64


def _check_modulus(kappa: float):
    if not 0.0 <= kappa < 1.0:
        raise DomainError(f"kappa must lie in [0,1) for the classical oracle, got {kappa}")


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of two positive numbers"""
    for _ in range(_AGM_MAX_STEPS):
        if abs(a - b) <= _AGM_REL_GAP * a:
            # the gap closes quadratically, so the midpoint is exact to rounding
            return 0.5 * (a + b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    raise ConvergenceError(f"AGM did not converge for ({a}, {b})")


def complete_k(kappa: float) -> float:
    """Complete elliptic integral K(kappa) = pi / (2 agm(1, lambda))"""
    _check_modulus(kappa)
    return math.pi / (2.0 * agm(1.0, math.sqrt(1.0 - kappa * kappa)))


def _landen_chain(kappa: float) -> Tuple[List[float], List[float]]:
    a, b, c = [1.0], [math.sqrt(1.0 - kappa * kappa)], [kappa]
    while abs(c[-1]) > _AGM_TOL:
        if len(a) > _AGM_MAX_STEPS:
            raise ConvergenceError(f"Landen chain did not converge for kappa={kappa}")
        a_n, b_n = a[-1], b[-1]
        a.append(0.5 * (a_n + b_n))
        b.append(math.sqrt(a_n * b_n))
        c.append(0.5 * (a_n - b_n))
    return a, c


def _amplitudes(u: float, kappa: float) -> Tuple[float, float]:
    a, c = _landen_chain(kappa)
    top = len(a) - 1
    phi = (2.0 ** top) * a[top] * u
    previous = phi
    for n in range(top, 0, -1):
        previous = phi
        phi = 0.5 * (phi + math.asin(c[n] / a[n] * math.sin(phi)))
    return phi, previous


def jacobi_amplitude(u: float, kappa: float) -> float:
    """am(u, kappa) by descending Landen transformation"""
    _check_modulus(kappa)
    return _amplitudes(float(u), kappa)[0]


def jacobi_sn_cn_dn(u: float, kappa: float) -> Tuple[float, float, float]:
    """
    Classical sn, cn and dn at a real argument

    Args:
        u: Real argument
        kappa: Modulus in [0, 1)

    Returns:
        Tuple (sn, cn, dn)
    """
    _check_modulus(kappa)
    phi0, phi1 = _amplitudes(float(u), kappa)
    sn, cn = math.sin(phi0), math.cos(phi0)
    if kappa == 0.0:
        return sn, cn, 1.0
    return sn, cn, cn / math.cos(phi1 - phi0)
