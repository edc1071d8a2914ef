"""
Exact rational polynomials and the Chebyshev families built on them
"""

import logging
from fractions import Fraction
from functools import lru_cache
from numbers import Number, Rational
from typing import Iterable, Tuple, Union

from .errors import DomainError, HyperjacError
from .series_core import TruncatedSeries, ps_polyval

logger = logging.getLogger(__name__)

Coefficient = Union[int, Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    raise DomainError(f"exact polynomial coefficients must be rational, got {value!r}")


class RationalPoly:
    """
    Dense polynomial with Fraction coefficients, lowest degree first

    The stored coefficient tuple never carries trailing zeros; the zero
    polynomial is the empty tuple and reports degree -1.
    """

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Iterable[Coefficient] = ()):
        data = [_as_fraction(c) for c in coeffs]
        while data and data[-1] == 0:
            data.pop()
        self._coeffs: Tuple[Fraction, ...] = tuple(data)

    @classmethod
    def x(cls) -> 'RationalPoly':
        return cls([0, 1])

    @classmethod
    def constant(cls, value: Coefficient) -> 'RationalPoly':
        return cls([value])

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> Fraction:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, Number):
            return self == RationalPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "RationalPoly(0)"
        terms = [f"{c}*x^{k}" for k, c in enumerate(self._coeffs) if c != 0]
        return f"RationalPoly({' + '.join(terms)})"

    # ---- arithmetic ----

    def _coerce(self, other) -> 'RationalPoly':
        if isinstance(other, RationalPoly):
            return other
        return RationalPoly.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return RationalPoly(self.coefficient(k) + other.coefficient(k) for k in range(size))

    __radd__ = __add__

    def __neg__(self):
        return RationalPoly(-c for c in self._coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return RationalPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise DomainError("negative powers are not polynomials")
        result = RationalPoly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def compose(self, inner: 'RationalPoly') -> 'RationalPoly':
        """self(inner(x)) by Horner's rule"""
        result = RationalPoly()
        for c in reversed(self._coeffs):
            result = result * inner + c
        return result

    def derivative(self) -> 'RationalPoly':
        return RationalPoly(k * c for k, c in enumerate(self._coeffs) if k > 0)

    def __call__(self, value):
        """Evaluate at a rational, float or complex point"""
        if isinstance(value, Rational):
            value, cast = Fraction(value), Fraction
        elif isinstance(value, complex):
            cast = complex
        else:
            cast = float
        result = cast(0)
        for c in reversed(self._coeffs):
            result = result * value + cast(c)
        return result

    def float_coeffs(self):
        return [float(c) for c in self._coeffs]

    def on_series(self, series: TruncatedSeries) -> TruncatedSeries:
        """The polynomial applied to a truncated series"""
        return ps_polyval(self.float_coeffs(), series)

    def even_part_in_square(self) -> 'RationalPoly':
        """
        Polynomial S with self(x) = S(x^2)

        Raises:
            HyperjacError: if an odd power of x is present
        """
        odd = [c for k, c in enumerate(self._coeffs) if k % 2 == 1 and c != 0]
        if odd:
            raise HyperjacError("polynomial is not even: odd powers of x remain")
        return RationalPoly(self._coeffs[0::2])


@lru_cache(maxsize=None)
def cheb_t(n: int) -> RationalPoly:
    """Chebyshev polynomial of the first kind, T_n(cos t) = cos(n t)"""
    if n < 0:
        raise DomainError(f"Chebyshev degree must be non-negative, got {n}")
    x = RationalPoly.x()
    prev, cur = RationalPoly.constant(1), x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


@lru_cache(maxsize=None)
def cheb_v(m: int) -> RationalPoly:
    """Chebyshev polynomial of the third kind: V_0 = 1, V_1 = 2x - 1"""
    if m < 0:
        raise DomainError(f"Chebyshev degree must be non-negative, got {m}")
    x = RationalPoly.x()
    prev, cur = RationalPoly.constant(1), RationalPoly([-1, 2])
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


@lru_cache(maxsize=None)
def s_n_poly(n: int) -> RationalPoly:
    """The degree-n polynomial S_n with T_n(x)^2 = S_n(x^2)"""
    if n < 1:
        raise DomainError(f"S_n is defined for n >= 1, got {n}")
    return (cheb_t(n) ** 2).even_part_in_square()


def odd_factorization_check(m: int) -> bool:
    """T_{2m+1}(x) == x * V_m(2x^2 - 1), exactly"""
    if m < 0:
        raise DomainError(f"m must be non-negative, got {m}")
    x = RationalPoly.x()
    return cheb_t(2 * m + 1) == x * cheb_v(m).compose(2 * x ** 2 - 1)


def q_poly(m: int) -> RationalPoly:
    """q(z) = z (z - 1)^2 V_m(2z - 1)^2 from the odd-case zero analysis"""
    if m < 0:
        raise DomainError(f"m must be non-negative, got {m}")
    z = RationalPoly.x()
    return z * (z - 1) ** 2 * cheb_v(m).compose(2 * z - 1) ** 2


def cubic_discriminant(c: RationalPoly) -> Fraction:
    """Discriminant of a cubic, 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2"""
    if c.degree != 3:
        raise DomainError(f"cubic discriminant needs degree 3, got degree {c.degree}")
    d0, c1, b2, a3 = c.coeffs
    return (18 * a3 * b2 * c1 * d0 - 4 * b2 ** 3 * d0 + b2 ** 2 * c1 ** 2
            - 4 * a3 * c1 ** 3 - 27 * a3 ** 2 * d0 ** 2)
