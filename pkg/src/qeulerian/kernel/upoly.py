"""
Dense univariate polynomials in q over the rationals.
Backs QRatFunc; gcds use a primitive pseudo-remainder sequence over the
integers so [n]_q!-sized denominators do not blow up.
"""
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import List, Sequence, Tuple, Union

from ..core.exceptions import DivisionByZeroError, KernelError
from .alphabet import ARITY, Q_INDEX
from .multipoly import MultiPoly

Scalar = Union[int, Fraction]


def _trim(coeffs: List[Fraction]) -> Tuple[Fraction, ...]:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class UPoly:
    """Coefficients stored low degree first, no trailing zeros."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Sequence[Scalar] = ()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])

    @classmethod
    def constant(cls, value: Scalar) -> 'UPoly':
        return cls((value,))

    @classmethod
    def q_power(cls, k: int) -> 'UPoly':
        return cls([0] * k + [1])

    @classmethod
    def from_multipoly(cls, poly: MultiPoly) -> 'UPoly':
        """Convert a polynomial that involves only q."""
        extra = poly.variables() - {'q'}
        if extra:
            raise KernelError(
                f"Expected a polynomial in q only, found {sorted(extra)}"
            )
        coeffs = [Fraction(0)] * (max(poly.degree('q'), 0) + 1)
        for exps, c in poly.items():
            coeffs[exps[Q_INDEX]] = c
        return cls(coeffs)

    def to_multipoly(self) -> MultiPoly:
        terms = {}
        for k, c in enumerate(self.coeffs):
            if c:
                exps = [0] * ARITY
                exps[Q_INDEX] = k
                terms[tuple(exps)] = c
        return MultiPoly(terms)

    # Inspection

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def at_zero(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def evaluate(self, value: Scalar) -> Fraction:
        value = Fraction(value)
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * value + c
        return total

    # Arithmetic

    def __add__(self, other: 'UPoly') -> 'UPoly':
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    def __neg__(self) -> 'UPoly':
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other: 'UPoly') -> 'UPoly':
        return self + (-other)

    def __mul__(self, other: 'UPoly') -> 'UPoly':
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UPoly(out)

    def scale(self, factor: Scalar) -> 'UPoly':
        factor = Fraction(factor)
        return UPoly([c * factor for c in self.coeffs])

    def divmod(self, other: 'UPoly') -> Tuple['UPoly', 'UPoly']:
        """Euclidean division over the rationals."""
        if other.is_zero():
            raise DivisionByZeroError("Polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree()
        lead = other.lead()
        quot = [Fraction(0)] * max(len(rem) - d, 1)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if not c:
                continue
            factor = c / lead
            quot[k - d] = factor
            for j, b in enumerate(other.coeffs):
                rem[k - d + j] -= factor * b
        return UPoly(quot), UPoly(rem[:d] if d > 0 else [])

    def monic(self) -> 'UPoly':
        if self.is_zero():
            return self
        return self.scale(1 / self.lead())

    def reversed(self, width: int) -> 'UPoly':
        """q^width * p(1/q); width must be at least the degree."""
        if self.degree() > width:
            raise KernelError("Reversal width below degree")
        padded = list(self.coeffs) + [Fraction(0)] * (width + 1 - len(self.coeffs))
        return UPoly(list(reversed(padded)))

    def low_order(self) -> int:
        """Exponent of the lowest nonzero term."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def __eq__(self, other) -> bool:
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __str__(self) -> str:
        return str(self.to_multipoly())

    def __repr__(self) -> str:
        return f"UPoly({self})"


def _primitive_integer(p: UPoly) -> List[int]:
    """Clear denominators and divide out the integer content."""
    if p.is_zero():
        return []
    denom = reduce(lcm, (c.denominator for c in p.coeffs), 1)
    ints = [int(c * denom) for c in p.coeffs]
    content = reduce(gcd, (abs(c) for c in ints), 0)
    return [c // content for c in ints]


def _pseudo_remainder(a: List[int], b: List[int]) -> List[int]:
    rem = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(rem) - 1 >= db and rem:
        lr = rem[-1]
        shift = len(rem) - 1 - db
        rem = [lb * c for c in rem]
        for j, c in enumerate(b):
            rem[shift + j] -= lr * c
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def _primitive(coeffs: List[int]) -> List[int]:
    if not coeffs:
        return []
    content = reduce(gcd, (abs(c) for c in coeffs), 0)
    return [c // content for c in coeffs]


def upoly_gcd(a: UPoly, b: UPoly) -> UPoly:
    """Monic gcd; gcd(0, 0) is 0."""
    x = _primitive_integer(a)
    y = _primitive_integer(b)
    if len(x) < len(y):
        x, y = y, x
    while y:
        r = _pseudo_remainder(x, y)
        x, y = y, _primitive(r)
    return UPoly(x).monic()
