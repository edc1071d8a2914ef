"""
Jacobi analogues built from the incomplete integral of F_a(kappa^2 sin^2)

For modulus kappa and parameter a the local inverse phi of
u(phi) = integral_0^phi F_a(kappa^2 sin^2 t) dt is computed as a truncated
series, and from it psi (sin psi = kappa sin phi), the sn/cn/dn analogues
s, c, d, the auxiliary partial = cos(2 a psi), its square nabla and the
delta amplitude delta = phi'.
"""

import math
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from typing import Optional, Union

import numpy as np
from scipy.special import roots_legendre

from config import Config
from .errors import ConvergenceError, DomainError
from .hypergeom import HypergeomParams, f_a_series, f_a_values
from .series_core import (
    TruncatedSeries,
    ps_compose,
    ps_div,
    ps_elem,
    ps_eval,
    ps_integrate,
    ps_mul,
    ps_revert,
)

logger = logging.getLogger(__name__)

STORED_FUNCTIONS = ('phi', 'psi', 's', 'c', 'd', 'partial', 'nabla', 'delta')
SQUARE_FUNCTIONS = {'D': 'd', 'C': 'c', 'S': 's'}
FUNCTION_NAMES = STORED_FUNCTIONS + tuple(SQUARE_FUNCTIONS)

MIN_BUILD_ORDER = 4


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """Exact rational from text such as "1/6"; floats are refused since 1/6 has no exact binary value"""
    if isinstance(text, float):
        raise DomainError(f"a must be given exactly as text, int or Fraction, got float {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise DomainError(f"not a rational number: {text!r}") from e


@dataclass(frozen=True)
class ModulusParams:
    """
    Parameter a (exact) with modulus kappa and its companions

    lam is the complementary modulus sqrt(1 - kappa^2) and Lambda_cap is
    1 - 2 lam^2.  N is 1/a when a is the reciprocal of a positive integer,
    0 for the classical case a = 0 and None otherwise.
    """

    a: Fraction
    kappa: float
    N: Optional[int] = field(init=False)
    lam: float = field(init=False)
    Lambda_cap: float = field(init=False)

    def __post_init__(self):
        a = parse_rational(self.a)
        kappa = float(self.kappa)
        if not 0 <= a <= 1:
            raise DomainError(f"a must lie in [0, 1], got {a}")
        if not 0.0 < kappa < 1.0 or not math.isfinite(kappa):
            raise DomainError(f"kappa must lie in (0,1), got {self.kappa}")
        if a == 0:
            n_value = 0
        elif a.numerator == 1:
            n_value = a.denominator
        else:
            n_value = None
        lam = math.sqrt((1.0 - kappa) * (1.0 + kappa))
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'kappa', kappa)
        object.__setattr__(self, 'N', n_value)
        object.__setattr__(self, 'lam', lam)
        object.__setattr__(self, 'Lambda_cap', 1.0 - 2.0 * lam * lam)

    @property
    def is_classical(self) -> bool:
        return self.a == 0

    @property
    def is_even_case(self) -> bool:
        """1/a = 2n"""
        return bool(self.N) and self.N % 2 == 0

    @property
    def is_odd_case(self) -> bool:
        """1/a = n = 2m + 1"""
        return bool(self.N) and self.N % 2 == 1

    @property
    def n(self) -> Optional[int]:
        if self.is_even_case:
            return self.N // 2
        if self.is_odd_case:
            return self.N
        return None

    @property
    def m(self) -> Optional[int]:
        """m with n = 2m + 1, when n is odd"""
        n = self.n
        return (n - 1) // 2 if n is not None and n % 2 == 1 else None

    @property
    def kappa_exact(self) -> Fraction:
        """The binary value of kappa as an exact rational"""
        return Fraction(self.kappa)

    @property
    def lam_sq_exact(self) -> Fraction:
        return 1 - self.kappa_exact ** 2

    def label(self) -> str:
        return f"a={self.a}, kappa={self.kappa!r}"


def trusted_radius(series: TruncatedSeries, tail_tol: float = Config.RADIUS_TAIL_TOL,
                   cap: float = Config.RADIUS_CAP) -> float:
    """
    Largest |u| at which the trailing retained terms stay below tail_tol

    Uses the last four coefficients so that odd or even functions, whose
    top coefficient can vanish identically, still get a finite bound.
    """
    order = series.order
    radius = cap
    for k in range(max(1, order - 3), order + 1):
        magnitude = abs(series.coeffs[k])
        if magnitude > 0:
            radius = min(radius, (tail_tol / magnitude) ** (1.0 / k))
    return radius


@dataclass(frozen=True)
class AnalogueSet:
    """The family phi, psi, s, c, d, partial, nabla, delta for one (a, kappa)"""

    params: ModulusParams
    order: int
    phi: TruncatedSeries
    psi: TruncatedSeries
    s: TruncatedSeries
    c: TruncatedSeries
    d: TruncatedSeries
    partial: TruncatedSeries
    nabla: TruncatedSeries
    delta: TruncatedSeries

    @property
    def D(self) -> TruncatedSeries:
        return ps_mul(self.d, self.d)

    @property
    def C(self) -> TruncatedSeries:
        return ps_mul(self.c, self.c)

    @property
    def S(self) -> TruncatedSeries:
        return ps_mul(self.s, self.s)

    def series(self, which: str) -> TruncatedSeries:
        if which not in FUNCTION_NAMES:
            raise DomainError(f"Unknown analogue function: {which}")
        return getattr(self, which)

    def radius(self, which: str, tail_tol: float = Config.RADIUS_TAIL_TOL,
               cap: float = Config.RADIUS_CAP) -> float:
        return trusted_radius(self.series(which), tail_tol, cap)

    def shared_radius(self, names=STORED_FUNCTIONS, tail_tol: float = Config.RADIUS_TAIL_TOL,
                      cap: float = Config.RADIUS_CAP) -> float:
        return min(self.radius(name, tail_tol, cap) for name in names)


def build(params: ModulusParams, order: int = Config.SERIES_ORDER) -> AnalogueSet:
    """
    Construct every analogue series for one parameter choice

    Args:
        params: Validated (a, kappa) bundle
        order: Truncation degree of every series (at least 4)

    Returns:
        AnalogueSet with all eight series populated
    """
    if order < MIN_BUILD_ORDER:
        raise DomainError(f"order {order} too small; need at least {MIN_BUILD_ORDER}")

    a = float(params.a)
    kappa = params.kappa
    hp = HypergeomParams(a=a, series_order=order)

    # u(phi) = integral of F_a(kappa^2 sin^2 t), then invert
    sin_series = ps_elem('sin', order)
    argument = kappa ** 2 * ps_mul(sin_series, sin_series)
    integrand = ps_compose(f_a_series(hp, order), argument)
    u_of_phi = ps_integrate(integrand).truncate(order)
    phi = ps_revert(u_of_phi)

    s = ps_compose(sin_series, phi)
    c = ps_compose(ps_elem('cos', order), phi)
    psi = ps_compose(ps_elem('arcsin', order), kappa * s)
    d = ps_compose(ps_elem('cos', order), psi)
    partial = ps_compose(ps_elem('cos', order), (2.0 * a) * psi)
    nabla = ps_mul(partial, partial)
    delta = ps_div(d, partial)

    logger.debug(f"Built analogue set for {params.label()} at order {order}")
    return AnalogueSet(params=params, order=order, phi=phi, psi=psi, s=s, c=c, d=d,
                       partial=partial, nabla=nabla, delta=delta)


def evaluate(analogues: AnalogueSet, which: str, u: complex,
             tail_tol: float = Config.RADIUS_TAIL_TOL, cap: float = Config.RADIUS_CAP) -> complex:
    """
    Value of one analogue function at u inside its trusted radius

    Raises:
        DomainError: if |u| exceeds the trusted radius of the series
    """
    series = analogues.series(which)
    radius = trusted_radius(series, tail_tol, cap)
    if abs(u) > radius:
        raise DomainError(f"|u| = {abs(u):.6g} exceeds trusted radius {radius:.6g} of {which}")
    return ps_eval(series, u)


@lru_cache(maxsize=None)
def _legendre_rule(nodes: int):
    return roots_legendre(nodes)


def _integral_of_integrand(hp: HypergeomParams, kappa: float, upper: float, nodes: int):
    """Gauss-Legendre integral over [0, upper] and its one-halving error estimate"""
    x, w = _legendre_rule(nodes)

    def rule(lo: float, hi: float) -> float:
        half = 0.5 * (hi - lo)
        theta = lo + half * (x + 1.0)
        values = f_a_values(hp, (kappa * np.sin(theta)) ** 2).real
        return half * float(np.dot(w, values))

    single = rule(0.0, upper)
    refined = rule(0.0, 0.5 * upper) + rule(0.5 * upper, upper)
    return refined, abs(refined - single)


def phi_oracle(params: ModulusParams, u: float, tol: float = Config.ORACLE_TOL,
               max_iter: int = Config.ORACLE_MAX_ITER,
               nodes: int = Config.QUADRATURE_NODES) -> float:
    """
    Amplitude phi(u) by quadrature and Newton iteration, bypassing the series

    Solves integral_0^phi F_a(kappa^2 sin^2 t) dt = u; the derivative of the
    left side is the integrand itself.
    """
    if isinstance(u, complex):
        if u.imag != 0:
            raise DomainError(f"phi_oracle needs a real argument, got {u}")
        u = u.real
    u = float(u)
    hp = HypergeomParams(a=float(params.a))
    kappa = params.kappa
    phi = u
    for iteration in range(1, max_iter + 1):
        value, error = _integral_of_integrand(hp, kappa, phi, nodes)
        slope = float(f_a_values(hp, np.array([(kappa * math.sin(phi)) ** 2]))[0].real)
        step = (value - u) / slope
        phi -= step
        if not abs(phi) < math.pi / 2:
            raise DomainError(f"oracle iterate {phi} left the principal interval (-pi/2, pi/2)")
        if abs(step) <= tol:
            if error > tol:
                raise ConvergenceError(f"phi_oracle quadrature error {error:.3g} exceeds {tol:.3g} at u={u}")
            logger.debug(f"phi_oracle converged in {iteration} steps, quadrature error {error:.3g}")
            return phi
    raise ConvergenceError(f"phi_oracle did not converge within {max_iter} Newton steps at u={u}")
