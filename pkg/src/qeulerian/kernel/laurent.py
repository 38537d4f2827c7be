"""
Laurent polynomials in q with polynomial coefficients in the remaining
variables. The only kernel type allowed to carry negative q-exponents.
"""
from fractions import Fraction
from typing import Dict, Mapping, Optional, Union

from ..core.exceptions import KernelError
from .alphabet import Q_INDEX
from .multipoly import MultiPoly

Scalar = Union[int, Fraction]


class LaurentPolyQ:
    """Map q-exponent -> q-free MultiPoly, zero coefficients dropped."""

    __slots__ = ('_terms',)

    def __init__(self, terms: Optional[Mapping[int, MultiPoly]] = None):
        clean: Dict[int, MultiPoly] = {}
        for k, coeff in (terms or {}).items():
            if not isinstance(coeff, MultiPoly):
                coeff = MultiPoly.constant(coeff)
            if 'q' in coeff.variables():
                raise KernelError(
                    "LaurentPolyQ coefficients must be free of q"
                )
            if coeff:
                clean[int(k)] = coeff
        self._terms = clean

    @classmethod
    def _wrap(cls, terms: Dict[int, MultiPoly]) -> 'LaurentPolyQ':
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def constant(cls, value: Union[Scalar, MultiPoly]) -> 'LaurentPolyQ':
        return cls({0: value})

    @classmethod
    def q_power(cls, k: int, coeff: Union[Scalar, MultiPoly] = 1) -> 'LaurentPolyQ':
        return cls({k: coeff})

    @classmethod
    def from_multipoly(cls, poly: MultiPoly) -> 'LaurentPolyQ':
        """Split a polynomial by its q-degree."""
        buckets: Dict[int, Dict] = {}
        for exps, c in poly.items():
            k = exps[Q_INDEX]
            free = exps[:Q_INDEX] + (0,) + exps[Q_INDEX + 1:]
            buckets.setdefault(k, {})[free] = c
        return cls._wrap({k: MultiPoly._wrap(t) for k, t in buckets.items()})

    def to_multipoly(self) -> MultiPoly:
        """
        Reassemble a polynomial.

        Raises:
            KernelError: If a negative q-power is present
        """
        if self._terms and self.min_degree() < 0:
            raise KernelError(
                f"Cannot convert {self} with negative q-powers to MultiPoly"
            )
        out = MultiPoly.zero()
        for k, coeff in self._terms.items():
            out = out + coeff * MultiPoly.var('q', k)
        return out

    # Inspection

    def coefficient(self, k: int) -> MultiPoly:
        return self._terms.get(k, MultiPoly.zero())

    def degrees(self):
        return sorted(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_degree(self) -> int:
        if not self._terms:
            raise KernelError("Zero Laurent polynomial has no degree")
        return min(self._terms)

    def max_degree(self) -> int:
        if not self._terms:
            raise KernelError("Zero Laurent polynomial has no degree")
        return max(self._terms)

    # Arithmetic

    def __add__(self, other) -> 'LaurentPolyQ':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            value = out[k] + c if k in out else c
            if value:
                out[k] = value
            else:
                out.pop(k, None)
        return LaurentPolyQ._wrap(out)

    __radd__ = __add__

    def __neg__(self) -> 'LaurentPolyQ':
        return LaurentPolyQ._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> 'LaurentPolyQ':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'LaurentPolyQ':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> 'LaurentPolyQ':
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPolyQ()
            return LaurentPolyQ._wrap(
                {k: c * other for k, c in self._terms.items()}
            )
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out: Dict[int, MultiPoly] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                out[k] = out[k] + c1 * c2 if k in out else c1 * c2
        return LaurentPolyQ._wrap({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def shift(self, j: int) -> 'LaurentPolyQ':
        """Multiply by q^j."""
        return LaurentPolyQ._wrap(
            {k + j: c for k, c in self._terms.items()}
        )

    def invert_q(self) -> 'LaurentPolyQ':
        """q -> 1/q."""
        return LaurentPolyQ._wrap({-k: c for k, c in self._terms.items()})

    def window(self, lo: Optional[int], hi: Optional[int]) -> 'LaurentPolyQ':
        """Keep q-degrees in [lo, hi]; None leaves a side open."""
        return LaurentPolyQ._wrap({
            k: c for k, c in self._terms.items()
            if (lo is None or k >= lo) and (hi is None or k <= hi)
        })

    def substitute_many(self, mapping) -> 'LaurentPolyQ':
        """Substitute q-free values into the coefficients."""
        return LaurentPolyQ(
            {k: c.substitute_many(mapping) for k, c in self._terms.items()}
        )

    # Comparison and rendering

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms):
            coeff = str(self._terms[k])
            if k == 0:
                parts.append(f"({coeff})")
            else:
                parts.append(f"({coeff})*q^{k}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPolyQ({self})"


def _coerce(value) -> Optional[LaurentPolyQ]:
    if isinstance(value, LaurentPolyQ):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPolyQ.constant(value)
    if isinstance(value, MultiPoly):
        return LaurentPolyQ.from_multipoly(value)
    return None
