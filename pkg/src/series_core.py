"""
Truncated power series at the origin

A ``TruncatedSeries`` of order ``M`` holds the Taylor coefficients
``c[0] .. c[M]`` of an analytic function; coefficients beyond ``M`` are
unknown rather than zero, so every binary operation returns a series of the
smaller order.
"""

import math
import logging
from numbers import Number
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import DomainError

logger = logging.getLogger(__name__)

Scalar = Union[int, float, complex, Number]

ELEMENTARY_KINDS = ('sin', 'cos', 'arcsin', 'sqrt1p', 'exp')


class TruncatedSeries:
    """Immutable truncated Taylor expansion with complex coefficients"""

    __slots__ = ('_coeffs',)

    def __init__(self, coeffs: Union[Sequence[Scalar], np.ndarray], order: int = None):
        data = np.asarray(coeffs, dtype=complex).ravel()
        if order is None:
            if data.size == 0:
                raise DomainError("empty coefficient sequence")
            order = data.size - 1
        if order < 0:
            raise DomainError(f"order cannot be negative: {order}")
        padded = np.zeros(order + 1, dtype=complex)
        keep = min(order + 1, data.size)
        padded[:keep] = data[:keep]
        if not np.all(np.isfinite(padded)):
            raise DomainError("series coefficients must be finite")
        padded.flags.writeable = False
        self._coeffs = padded

    # ---- construction helpers ----

    @classmethod
    def constant(cls, value: Scalar, order: int) -> 'TruncatedSeries':
        return cls([complex(value)], order=order)

    @classmethod
    def identity(cls, order: int) -> 'TruncatedSeries':
        """The series variable t itself"""
        return cls([0.0, 1.0], order=order)

    # ---- accessors ----

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def order(self) -> int:
        return self._coeffs.size - 1

    def __len__(self) -> int:
        return self._coeffs.size

    def __getitem__(self, k):
        return self._coeffs[k]

    def __iter__(self):
        return iter(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, coeffs={np.array2string(self._coeffs, precision=6)})"

    def truncate(self, order: int) -> 'TruncatedSeries':
        if order > self.order:
            raise DomainError(f"cannot extend a series of order {self.order} to order {order}")
        return TruncatedSeries(self._coeffs[:order + 1], order=order)

    @property
    def real(self) -> np.ndarray:
        return self._coeffs.real

    def max_abs(self) -> float:
        return float(np.max(np.abs(self._coeffs)))

    # ---- arithmetic ----

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return ps_add(self, other)
        if isinstance(other, Number):
            data = self._coeffs.copy()
            data[0] += complex(other)
            return TruncatedSeries(data)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self._coeffs)

    def __sub__(self, other):
        if isinstance(other, (TruncatedSeries, Number)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Number):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return ps_mul(self, other)
        if isinstance(other, Number):
            return TruncatedSeries(self._coeffs * complex(other))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return ps_div(self, other)
        if isinstance(other, Number):
            return TruncatedSeries(self._coeffs / complex(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Number):
            return ps_reciprocal(self) * other
        return NotImplemented

    def __pow__(self, exponent: int):
        return ps_pow(self, exponent)

    # ---- calculus and evaluation ----

    def compose(self, inner: 'TruncatedSeries') -> 'TruncatedSeries':
        return ps_compose(self, inner)

    def diff(self) -> 'TruncatedSeries':
        return ps_diff(self)

    def integrate(self) -> 'TruncatedSeries':
        return ps_integrate(self)

    def evaluate(self, u: Scalar) -> complex:
        return ps_eval(self, u)


def ps_add(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    order = min(x.order, y.order)
    return TruncatedSeries(x.coeffs[:order + 1] + y.coeffs[:order + 1])


def ps_mul(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller order"""
    order = min(x.order, y.order)
    product = np.convolve(x.coeffs[:order + 1], y.coeffs[:order + 1])
    return TruncatedSeries(product[:order + 1], order=order)


def ps_pow(x: TruncatedSeries, exponent: int) -> TruncatedSeries:
    if exponent < 0:
        return ps_pow(ps_reciprocal(x), -exponent)
    result = TruncatedSeries.constant(1.0, x.order)
    base = x
    while exponent:
        if exponent & 1:
            result = ps_mul(result, base)
        exponent >>= 1
        if exponent:
            base = ps_mul(base, base)
    return result


def ps_reciprocal(x: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse; requires a nonzero constant term"""
    c = x.coeffs
    if c[0] == 0:
        raise DomainError("series with zero constant term has no reciprocal at 0")
    out = np.zeros_like(c)
    out[0] = 1.0 / c[0]
    for k in range(1, c.size):
        out[k] = -np.dot(c[1:k + 1], out[k - 1::-1]) / c[0]
    return TruncatedSeries(out)


def ps_div(x: TruncatedSeries, y: TruncatedSeries) -> TruncatedSeries:
    return ps_mul(x, ps_reciprocal(y))


def ps_compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """
    Taylor coefficients of outer(inner(t))

    Args:
        outer: Series evaluated at the inner one
        inner: Series with constant term exactly 0

    Returns:
        Series of order min(outer.order, inner.order)
    """
    if inner.coeffs[0] != 0:
        raise DomainError(
            f"inner series must vanish at 0 for composition, got constant term {inner.coeffs[0]}"
        )
    order = min(outer.order, inner.order)
    inner = inner.truncate(order)
    result = TruncatedSeries.constant(outer.coeffs[order], order)
    for k in range(order - 1, -1, -1):
        result = ps_mul(result, inner) + outer.coeffs[k]
    return result


def _diff_same_order(x: TruncatedSeries) -> TruncatedSeries:
    # The top coefficient is unknown; it only feeds orders that Newton discards.
    c = x.coeffs
    k = np.arange(1, c.size)
    return TruncatedSeries(np.append(c[1:] * k, 0.0), order=x.order)


def ps_revert(x: TruncatedSeries) -> TruncatedSeries:
    """
    Compositional inverse y with x(y(t)) = t

    Newton's method on series, seeded with t/x1; each step doubles the number
    of correct coefficients.
    """
    c = x.coeffs
    if x.order < 1 or c[0] != 0 or c[1] == 0:
        raise DomainError("series is not invertible at 0: need x(0) = 0 and x'(0) != 0")
    order = x.order
    t = TruncatedSeries.identity(order)
    y = t / c[1]
    slope = _diff_same_order(x)
    steps = max(1, math.ceil(math.log2(order + 1))) + 1
    for _ in range(steps):
        residual = ps_compose(x, y) - t
        if not np.any(residual.coeffs):
            break
        y = y - ps_div(residual, ps_compose(slope, y))
    logger.debug(f"Reverted series of order {order} in at most {steps} Newton steps")
    return y


def ps_diff(x: TruncatedSeries) -> TruncatedSeries:
    """Termwise derivative, one order lower"""
    c = x.coeffs
    if x.order == 0:
        return TruncatedSeries([0.0], order=0)
    return TruncatedSeries(c[1:] * np.arange(1, c.size))


def ps_integrate(x: TruncatedSeries) -> TruncatedSeries:
    """Termwise antiderivative vanishing at 0, one order higher"""
    c = x.coeffs
    return TruncatedSeries(np.concatenate(([0.0], c / np.arange(1, c.size + 1))))


def ps_elem(kind: str, order: int) -> TruncatedSeries:
    """
    Maclaurin series of an elementary function

    Args:
        kind: One of sin, cos, arcsin, sqrt1p (sqrt(1+t)) or exp
        order: Truncation degree

    Returns:
        TruncatedSeries of the requested order
    """
    if order < 0:
        raise DomainError(f"order cannot be negative: {order}")
    c = np.zeros(order + 1)
    if kind == 'sin':
        for k in range(1, order + 1, 2):
            c[k] = (-1) ** (k // 2) / math.factorial(k)
    elif kind == 'cos':
        for k in range(0, order + 1, 2):
            c[k] = (-1) ** (k // 2) / math.factorial(k)
    elif kind == 'arcsin':
        for k in range(1, order + 1, 2):
            j = k // 2
            c[k] = math.comb(2 * j, j) / (4 ** j * (2 * j + 1))
    elif kind == 'sqrt1p':
        c[0] = 1.0
        for k in range(1, order + 1):
            c[k] = c[k - 1] * (0.5 - (k - 1)) / k
    elif kind == 'exp':
        for k in range(order + 1):
            c[k] = 1.0 / math.factorial(k)
    else:
        raise DomainError(f"Unknown elementary series kind: {kind}")
    return TruncatedSeries(c)


def ps_polyval(coeffs: Iterable[Scalar], x: TruncatedSeries) -> TruncatedSeries:
    """Polynomial with given coefficients (lowest degree first) applied to a series"""
    coeffs = list(coeffs)
    if not coeffs:
        return TruncatedSeries.constant(0.0, x.order)
    result = TruncatedSeries.constant(complex(coeffs[-1]), x.order)
    for c in reversed(coeffs[:-1]):
        result = ps_mul(result, x) + complex(c)
    return result


def ps_eval(x: TruncatedSeries, u: Scalar) -> complex:
    """Horner evaluation of the truncated sum at u"""
    return complex(np.polyval(x.coeffs[::-1], complex(u)))
