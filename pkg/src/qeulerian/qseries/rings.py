"""
Pluggable coefficient rings for truncated t-series.

Elements are plain kernel values (Fraction, QRatFunc, MultiPoly,
LaurentPolyQ) that already support +, -, * with integer coercion; a ring
object supplies constants, q-numbers, division and truncation for them.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Any, Optional

from ..core.exceptions import CapabilityError, DivisionByZeroError
from ..kernel import (
    LaurentPolyQ, MultiPoly, QRatFunc, qbinomial, qfactorial, qint,
)


class RingTag(str, Enum):
    RATIONAL = 'Rational'
    QRATFUNC = 'QRatFunc'
    MULTIPOLY = 'MultiPoly'
    LAURENT = 'LaurentPolyQ'


@dataclass(frozen=True)
class RingCapabilities:
    has_division: bool
    has_q_variable: bool
    has_rational_scalars: bool


class Ring:
    """Common interface; concrete rings override the element hooks."""

    tag: RingTag
    capabilities: RingCapabilities

    def require(self, operation: str, **flags: bool):
        """
        Check capability flags before running an operation.

        Raises:
            CapabilityError: If a required flag is not set
        """
        for name, needed in flags.items():
            if needed and not getattr(self.capabilities, name):
                raise CapabilityError(
                    f"{operation} requires {name} but {self.tag.value} "
                    f"ring lacks it"
                )

    def zero(self) -> Any:
        return self.from_scalar(0)

    def one(self) -> Any:
        return self.from_scalar(1)

    def from_scalar(self, value) -> Any:
        raise NotImplementedError

    def lift(self, value) -> Any:
        """Coerce ints, Fractions and q-only MultiPolys into the ring."""
        if isinstance(value, (int, Fraction)):
            return self.from_scalar(value)
        return self._lift(value)

    def _lift(self, value) -> Any:
        return value

    def q(self) -> Any:
        return self.q_power(1)

    def q_power(self, k: int) -> Any:
        raise NotImplementedError

    def qint(self, n: int) -> Any:
        return self._lift(qint(n))

    def qfactorial(self, n: int) -> Any:
        return self._lift(qfactorial(n))

    def qbinomial(self, n: int, k: int) -> Any:
        return self._lift(qbinomial(n, k))

    def is_zero(self, value) -> bool:
        return not value

    def rational_constant(self, value) -> Optional[Fraction]:
        """value as a rational number, or None if it is not a constant."""
        return Fraction(value)

    def div(self, a, b) -> Any:
        raise CapabilityError(f"{self.tag.value} ring has no division")

    def scalar_div(self, a, c) -> Any:
        """a / c for a nonzero rational c."""
        c = Fraction(c)
        if not c:
            raise DivisionByZeroError("Division by zero scalar")
        return a * (1 / c)

    def truncate(self, value) -> Any:
        return value

    def render(self, value) -> str:
        return str(value)

    def describe(self) -> str:
        return self.tag.value


class RationalRing(Ring):
    """Rationals with q specialized to a fixed value (classical at q = 1)."""

    tag = RingTag.RATIONAL
    capabilities = RingCapabilities(
        has_division=True, has_q_variable=False, has_rational_scalars=True
    )

    def __init__(self, q: Fraction = Fraction(1)):
        self.q_value = Fraction(q)

    def from_scalar(self, value) -> Fraction:
        return Fraction(value)

    def _lift(self, value) -> Fraction:
        if isinstance(value, MultiPoly):
            return value.evaluate({'q': self.q_value})
        return Fraction(value)

    def q_power(self, k: int) -> Fraction:
        if k < 0 and not self.q_value:
            raise DivisionByZeroError("Negative power of q = 0")
        return self.q_value ** k

    def div(self, a, b) -> Fraction:
        if not b:
            raise DivisionByZeroError("Division by zero")
        return Fraction(a) / Fraction(b)

    def describe(self) -> str:
        return f"Rational(q={self.q_value})"


class QRatFuncRing(Ring):
    """Rational functions in a symbolic q."""

    tag = RingTag.QRATFUNC
    capabilities = RingCapabilities(
        has_division=True, has_q_variable=True, has_rational_scalars=True
    )

    def from_scalar(self, value) -> QRatFunc:
        return QRatFunc.constant(value)

    def _lift(self, value) -> QRatFunc:
        if isinstance(value, MultiPoly):
            return QRatFunc.from_multipoly(value)
        return value

    def q_power(self, k: int) -> QRatFunc:
        return QRatFunc.q_power(k)

    def is_zero(self, value) -> bool:
        return value.is_zero()

    def rational_constant(self, value) -> Optional[Fraction]:
        if value.den.degree() > 0 or value.num.degree() > 0:
            return None
        return value.evaluate(0)

    def div(self, a, b) -> QRatFunc:
        return self._lift(a) / self._lift(b)


class MultiPolyRing(Ring):
    """
    Polynomials over the alphabet. With q_window = K every value is reduced
    modulo q^K, which is how q-adic windows are enforced.
    """

    tag = RingTag.MULTIPOLY
    capabilities = RingCapabilities(
        has_division=False, has_q_variable=True, has_rational_scalars=True
    )

    def __init__(self, q_window: Optional[int] = None):
        self.q_window = q_window

    def from_scalar(self, value) -> MultiPoly:
        return MultiPoly.constant(value)

    def q_power(self, k: int) -> MultiPoly:
        if k < 0:
            raise CapabilityError(
                "MultiPoly ring cannot hold negative q-powers"
            )
        return self.truncate(MultiPoly.var('q', k))

    def is_zero(self, value) -> bool:
        return value.is_zero()

    def rational_constant(self, value) -> Optional[Fraction]:
        return value.constant_term() if value.is_constant() else None

    def truncate(self, value) -> MultiPoly:
        if self.q_window is None:
            return value
        return value.truncate('q', self.q_window)

    def describe(self) -> str:
        if self.q_window is None:
            return 'MultiPoly'
        return f"MultiPoly(mod q^{self.q_window})"


class LaurentRing(Ring):
    """Laurent polynomials in q, optionally clipped to a degree window."""

    tag = RingTag.LAURENT
    capabilities = RingCapabilities(
        has_division=False, has_q_variable=True, has_rational_scalars=True
    )

    def __init__(self, lo: Optional[int] = None, hi: Optional[int] = None):
        self.lo = lo
        self.hi = hi

    def from_scalar(self, value) -> LaurentPolyQ:
        return LaurentPolyQ.constant(value)

    def _lift(self, value) -> LaurentPolyQ:
        if isinstance(value, MultiPoly):
            return LaurentPolyQ.from_multipoly(value)
        return value

    def q_power(self, k: int) -> LaurentPolyQ:
        return LaurentPolyQ.q_power(k)

    def is_zero(self, value) -> bool:
        return value.is_zero()

    def rational_constant(self, value) -> Optional[Fraction]:
        if value.is_zero():
            return Fraction(0)
        if value.degrees() != [0]:
            return None
        coeff = value.coefficient(0)
        return coeff.constant_term() if coeff.is_constant() else None

    def truncate(self, value) -> LaurentPolyQ:
        if self.lo is None and self.hi is None:
            return value
        return value.window(self.lo, self.hi)

    def describe(self) -> str:
        return f"LaurentPolyQ[{self.lo}, {self.hi}]"
