"""
Truncated formal power series in t over a coefficient ring, plus the
classical calculus (inverse, log, exp, rational powers, scaling).
"""
import logging
from fractions import Fraction
from typing import Any, Callable, List, Sequence

from ..core.exceptions import SeriesError
from .rings import Ring

logger = logging.getLogger(__name__)


class TSeries:
    """
    c_0 + c_1 t + ... + c_N t^N + O(t^(N+1)).
    Binary operations truncate to the smaller order.
    """

    __slots__ = ('ring', 'coeffs')

    def __init__(self, ring: Ring, coeffs: Sequence[Any]):
        if not coeffs:
            raise SeriesError("A series needs at least one coefficient")
        self.ring = ring
        self.coeffs = tuple(ring.truncate(ring.lift(c)) for c in coeffs)

    @classmethod
    def _wrap(cls, ring: Ring, coeffs: List[Any]) -> 'TSeries':
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.coeffs = tuple(coeffs)
        return obj

    # Constructors

    @classmethod
    def zero(cls, ring: Ring, order: int) -> 'TSeries':
        return cls._wrap(ring, [ring.zero()] * (order + 1))

    @classmethod
    def constant(cls, ring: Ring, value, order: int) -> 'TSeries':
        return cls(ring, [value] + [ring.zero()] * order)

    @classmethod
    def monomial(cls, ring: Ring, value, power: int, order: int) -> 'TSeries':
        """value * t^power truncated at order."""
        coeffs = [ring.zero()] * (order + 1)
        if power <= order:
            coeffs[power] = value
        return cls(ring, coeffs)

    @classmethod
    def from_function(
        cls,
        ring: Ring,
        order: int,
        coefficient: Callable[[int], Any]
    ) -> 'TSeries':
        return cls(ring, [coefficient(m) for m in range(order + 1)])

    # Inspection

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, m: int):
        return self.coeffs[m]

    def coefficient(self, m: int):
        if m > self.order:
            raise SeriesError(
                f"Coefficient t^{m} is beyond truncation order {self.order}"
            )
        return self.coeffs[m]

    def truncate(self, order: int) -> 'TSeries':
        if order > self.order:
            raise SeriesError(
                f"Cannot extend a series of order {self.order} to {order}"
            )
        return TSeries._wrap(self.ring, list(self.coeffs[:order + 1]))

    def map(self, fn: Callable[[Any], Any], ring: Ring = None) -> 'TSeries':
        """Apply fn to every coefficient, optionally landing in another ring."""
        return TSeries(ring or self.ring, [fn(c) for c in self.coeffs])

    # Arithmetic

    def _check(self, other: 'TSeries'):
        if self.ring.tag != other.ring.tag:
            raise SeriesError(
                f"Ring mismatch: {self.ring.tag.value} vs {other.ring.tag.value}"
            )

    def _lift_other(self, other) -> 'TSeries':
        if isinstance(other, TSeries):
            self._check(other)
            return other
        return TSeries.constant(self.ring, other, self.order)

    def __add__(self, other) -> 'TSeries':
        other = self._lift_other(other)
        n = min(self.order, other.order)
        return TSeries(
            self.ring, [self.coeffs[m] + other.coeffs[m] for m in range(n + 1)]
        )

    __radd__ = __add__

    def __neg__(self) -> 'TSeries':
        return TSeries._wrap(self.ring, [-c for c in self.coeffs])

    def __sub__(self, other) -> 'TSeries':
        other = self._lift_other(other)
        return self + (-other)

    def __rsub__(self, other) -> 'TSeries':
        other = self._lift_other(other)
        return other + (-self)

    def __mul__(self, other) -> 'TSeries':
        if not isinstance(other, TSeries):
            value = self.ring.lift(other)
            return TSeries(self.ring, [c * value for c in self.coeffs])
        self._check(other)
        ring = self.ring
        n = min(self.order, other.order)
        a = self.coeffs
        b = other.coeffs
        live_a = [i for i in range(n + 1) if not ring.is_zero(a[i])]
        live_b = [j for j in range(n + 1) if not ring.is_zero(b[j])]
        out = [ring.zero() for _ in range(n + 1)]
        for i in live_a:
            for j in live_b:
                if i + j > n:
                    break
                out[i + j] = out[i + j] + a[i] * b[j]
        return TSeries(ring, out)

    __rmul__ = __mul__

    def scalar_div(self, c) -> 'TSeries':
        return TSeries(self.ring, [self.ring.scalar_div(v, c) for v in self.coeffs])

    # Comparison and rendering

    def __eq__(self, other) -> bool:
        if not isinstance(other, TSeries):
            return NotImplemented
        return (
            self.ring.tag == other.ring.tag
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.ring.tag, self.coeffs))

    def __str__(self) -> str:
        parts = []
        for m, c in enumerate(self.coeffs):
            if self.ring.is_zero(c):
                continue
            text = self.ring.render(c)
            if m > 0 and (' ' in text or text.startswith('-')):
                text = f"({text})"
            if m == 0:
                parts.append(text)
            elif m == 1:
                parts.append(f"{text}*t")
            else:
                parts.append(f"{text}*t^{m}")
        parts.append(f"O(t^{{{self.order + 1}}})")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TSeries[{self.ring.describe()}]({self})"


# Classical calculus


def _unit_inverse(ring: Ring, c0):
    one = ring.one()
    if c0 == one:
        return one
    if c0 == -one:
        return -one
    if ring.is_zero(c0):
        raise SeriesError(f"Constant term of {ring.describe()} series is zero")
    if ring.capabilities.has_division:
        return ring.div(one, c0)
    scalar = ring.rational_constant(c0)
    if scalar is not None and ring.capabilities.has_rational_scalars:
        return ring.scalar_div(one, scalar)
    raise SeriesError(
        f"Constant term {ring.render(c0)} is not invertible in "
        f"{ring.describe()}"
    )


def series_inverse(f: TSeries) -> TSeries:
    """
    1/f for f with invertible constant term.

    Raises:
        SeriesError: If the constant term is not a unit
    """
    ring = f.ring
    inv0 = _unit_inverse(ring, f[0])
    out = [inv0]
    for m in range(1, f.order + 1):
        acc = ring.zero()
        for k in range(1, m + 1):
            if not ring.is_zero(f[k]):
                acc = acc + f[k] * out[m - k]
        out.append(ring.truncate(-(inv0 * acc)))
    return TSeries._wrap(ring, out)


def series_derivative(f: TSeries) -> TSeries:
    """Ordinary d/dt; order drops by one."""
    if f.order < 1:
        raise SeriesError("Derivative needs order >= 1")
    return TSeries(f.ring, [f[m + 1] * (m + 1) for m in range(f.order)])


def series_integral(f: TSeries) -> TSeries:
    """Ordinary integral from 0; order grows by one."""
    f.ring.require('series_integral', has_rational_scalars=True)
    ring = f.ring
    return TSeries(
        ring,
        [ring.zero()] + [ring.scalar_div(f[m], m + 1) for m in range(f.order + 1)]
    )


def series_log(f: TSeries) -> TSeries:
    """
    log f for f(0) = 1, computed as the integral of f'/f.

    Raises:
        SeriesError: If f(0) != 1
    """
    ring = f.ring
    ring.require('series_log', has_rational_scalars=True)
    if f[0] != ring.one():
        raise SeriesError("log needs constant term 1")
    if f.order == 0:
        return TSeries.zero(ring, 0)
    quotient = series_derivative(f) * series_inverse(f.truncate(f.order - 1))
    return series_integral(quotient)


def series_exp(h: TSeries) -> TSeries:
    """
    exp h for h(0) = 0 via e_m = (1/m) sum_k k h_k e_(m-k).

    Raises:
        SeriesError: If h(0) != 0
    """
    ring = h.ring
    ring.require('series_exp', has_rational_scalars=True)
    if not ring.is_zero(h[0]):
        raise SeriesError("exp needs constant term 0")
    out = [ring.one()]
    for m in range(1, h.order + 1):
        acc = ring.zero()
        for k in range(1, m + 1):
            if not ring.is_zero(h[k]):
                acc = acc + h[k] * out[m - k] * k
        out.append(ring.truncate(ring.scalar_div(acc, m)))
    return TSeries._wrap(ring, out)


def series_power(f: TSeries, exponent) -> TSeries:
    """(1 + h)^a for a rational exponent a, as exp(a log(1 + h))."""
    exponent = Fraction(exponent)
    if exponent.denominator == 1 and exponent >= 0:
        result = TSeries.constant(f.ring, f.ring.one(), f.order)
        for _ in range(int(exponent)):
            result = result * f
        return result
    return series_exp(series_log(f) * f.ring.from_scalar(exponent))


def series_scale(f: TSeries, c=1, j: int = 0) -> TSeries:
    """Substitute t -> c q^j t."""
    ring = f.ring
    c = ring.lift(c)
    factor = c * ring.q_power(j)
    out = []
    power = ring.one()
    for m in range(f.order + 1):
        out.append(f[m] * power)
        power = power * factor
    return TSeries(ring, out)


def series_shift(f: TSeries, s: int) -> TSeries:
    """
    Multiply by t^s; negative s divides by t^|s|.

    Raises:
        SeriesError: If dividing would drop a nonzero coefficient
    """
    ring = f.ring
    if s >= 0:
        return TSeries(ring, [ring.zero()] * s + list(f.coeffs))
    drop = -s
    if drop > f.order:
        raise SeriesError("Shift exceeds the series order")
    if any(not ring.is_zero(c) for c in f.coeffs[:drop]):
        raise SeriesError(f"Series is not divisible by t^{drop}")
    return TSeries._wrap(ring, list(f.coeffs[drop:]))
