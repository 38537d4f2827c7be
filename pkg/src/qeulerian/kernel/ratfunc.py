"""
Reduced rational functions in q over the rationals.
Representatives are unique: coprime numerator and denominator, denominator
monic, so equality is structural.
"""
from fractions import Fraction
from typing import List, Optional, Union

from ..core.exceptions import DivisionByZeroError, KernelError, SeriesError
from .multipoly import MultiPoly
from .upoly import UPoly, upoly_gcd

Scalar = Union[int, Fraction]


class QRatFunc:
    """numerator(q) / denominator(q) in lowest terms."""

    __slots__ = ('num', 'den')

    def __init__(self, num: UPoly, den: Optional[UPoly] = None):
        den = den if den is not None else UPoly.constant(1)
        if den.is_zero():
            raise DivisionByZeroError("Rational function with zero denominator")
        if num.is_zero():
            self.num = UPoly()
            self.den = UPoly.constant(1)
            return
        if den.degree() > 0:
            g = upoly_gcd(num, den)
            if g.degree() > 0:
                num, _ = num.divmod(g)
                den, _ = den.divmod(g)
        lead = den.lead()
        self.num = num.scale(1 / lead) if lead != 1 else num
        self.den = den.scale(1 / lead) if lead != 1 else den

    # Constructors

    @classmethod
    def constant(cls, value: Scalar) -> 'QRatFunc':
        return cls(UPoly.constant(value))

    @classmethod
    def q(cls) -> 'QRatFunc':
        return cls(UPoly.q_power(1))

    @classmethod
    def q_power(cls, k: int) -> 'QRatFunc':
        if k >= 0:
            return cls(UPoly.q_power(k))
        return cls(UPoly.constant(1), UPoly.q_power(-k))

    @classmethod
    def from_multipoly(cls, poly: MultiPoly) -> 'QRatFunc':
        return cls(UPoly.from_multipoly(poly))

    # Inspection

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def to_multipoly(self) -> MultiPoly:
        if not self.is_polynomial():
            raise KernelError(f"{self} is not a polynomial in q")
        return self.num.to_multipoly()

    def evaluate(self, value: Scalar) -> Fraction:
        """
        Value at a rational q.

        Raises:
            DivisionByZeroError: If value is a root of the denominator
        """
        d = self.den.evaluate(value)
        if not d:
            raise DivisionByZeroError(
                f"q = {value} is a pole of {self}"
            )
        return self.num.evaluate(value) / d

    def invert_q(self) -> 'QRatFunc':
        """f(q) -> f(1/q)."""
        dn = max(self.num.degree(), 0)
        dd = self.den.degree()
        num = self.num.reversed(dn) * UPoly.q_power(dd)
        den = self.den.reversed(dd) * UPoly.q_power(dn)
        return QRatFunc(num, den)

    def q_expansion(self, order: int) -> List[Fraction]:
        """
        Power series coefficients of q^0 .. q^(order-1).

        Raises:
            SeriesError: If the function has a pole at q = 0
        """
        d0 = self.den.at_zero()
        if not d0:
            raise SeriesError(f"{self} is not regular at q = 0")
        num = list(self.num.coeffs) + [Fraction(0)] * order
        den = self.den.coeffs
        out: List[Fraction] = []
        for k in range(order):
            acc = num[k]
            for j in range(1, min(k, len(den) - 1) + 1):
                acc -= den[j] * out[k - j]
            out.append(acc / d0)
        return out

    # Arithmetic

    def __add__(self, other) -> 'QRatFunc':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return QRatFunc(self.num + other.num, self.den)
        return QRatFunc(
            self.num * other.den + other.num * self.den,
            self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> 'QRatFunc':
        return QRatFunc._raw(-self.num, self.den)

    def __sub__(self, other) -> 'QRatFunc':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'QRatFunc':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> 'QRatFunc':
        if isinstance(other, (int, Fraction)):
            if not other:
                return QRatFunc.constant(0)
            return QRatFunc._raw(self.num.scale(other), self.den)
        if not isinstance(other, QRatFunc):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QRatFunc.constant(0)
        return QRatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> 'QRatFunc':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise DivisionByZeroError(f"Division of {self} by zero")
        return QRatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> 'QRatFunc':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int) -> 'QRatFunc':
        if k < 0:
            return QRatFunc.constant(1) / (self ** -k)
        result = QRatFunc.constant(1)
        for _ in range(k):
            result = result * self
        return result

    @classmethod
    def _raw(cls, num: UPoly, den: UPoly) -> 'QRatFunc':
        obj = cls.__new__(cls)
        if num.is_zero():
            obj.num, obj.den = UPoly(), UPoly.constant(1)
        else:
            obj.num, obj.den = num, den
        return obj

    # Comparison and rendering

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"QRatFunc({self})"


def _coerce(value) -> Optional[QRatFunc]:
    if isinstance(value, QRatFunc):
        return value
    if isinstance(value, (int, Fraction)):
        return QRatFunc.constant(value)
    if isinstance(value, MultiPoly):
        return QRatFunc.from_multipoly(value)
    return None
