"""
Sparse multivariate polynomials with exact rational coefficients over the
fixed alphabet. Values are immutable and hashable.
"""
import operator
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Set, Tuple, Union

from ..core.exceptions import (
    DivisionByZeroError, KernelError, NotDivisibleError,
)
from .alphabet import ARITY, VARIABLES, var_index

Exponent = Tuple[int, ...]
Scalar = Union[int, Fraction]

ZERO_EXPONENT: Exponent = (0,) * ARITY


def _add_exponents(a: Exponent, b: Exponent) -> Exponent:
    return tuple(map(operator.add, a, b))


def _graded_key(exps: Exponent):
    return (sum(exps), exps)


def _render_key(item):
    exps = item[0]
    return (sum(exps), tuple(-e for e in exps))


def _monomial_text(exps: Exponent) -> str:
    parts = []
    for name, e in zip(VARIABLES, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class MultiPoly:
    """
    Polynomial stored as a map from dense exponent vectors to nonzero
    Fractions. Exponent vectors always have one entry per alphabet variable.
    """

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Mapping[Iterable[int], Scalar]] = None):
        """
        Build a polynomial from an exponent-vector map.

        Args:
            terms: Mapping exponent vector -> coefficient

        Raises:
            KernelError: On wrong arity or negative exponents
        """
        clean: Dict[Exponent, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != ARITY:
                raise KernelError(
                    f"Exponent vector {exps} has arity {len(exps)}, "
                    f"expected {ARITY}"
                )
            if any(e < 0 for e in exps):
                raise KernelError(
                    f"Negative exponent in {exps}; use LaurentPolyQ for "
                    f"negative q-powers"
                )
            value = clean.get(exps, 0) + Fraction(coeff)
            if value:
                clean[exps] = value
            else:
                clean.pop(exps, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: Dict[Exponent, Fraction]) -> 'MultiPoly':
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # Constructors

    @classmethod
    def zero(cls) -> 'MultiPoly':
        return cls._wrap({})

    @classmethod
    def one(cls) -> 'MultiPoly':
        return cls._wrap({ZERO_EXPONENT: Fraction(1)})

    @classmethod
    def constant(cls, value: Scalar) -> 'MultiPoly':
        value = Fraction(value)
        return cls._wrap({ZERO_EXPONENT: value} if value else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> 'MultiPoly':
        return cls.monomial({name: power})

    @classmethod
    def monomial(
        cls,
        powers: Mapping[str, int],
        coeff: Scalar = 1
    ) -> 'MultiPoly':
        """
        Single term coeff * prod(var^power).

        Args:
            powers: Mapping variable name -> exponent
            coeff: Rational coefficient
        """
        exps = [0] * ARITY
        for name, power in powers.items():
            exps[var_index(name)] += power
        return cls({tuple(exps): coeff})

    # Inspection

    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_terms(self) -> List[Tuple[Exponent, Fraction]]:
        """Terms in canonical rendering order."""
        return sorted(self._terms.items(), key=_render_key)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {ZERO_EXPONENT}

    def constant_term(self) -> Fraction:
        return self._terms.get(ZERO_EXPONENT, Fraction(0))

    def variables(self) -> Set[str]:
        names = set()
        for exps in self._terms:
            for name, e in zip(VARIABLES, exps):
                if e:
                    names.add(name)
        return names

    def degree(self, var: Optional[str] = None) -> int:
        """Degree in one variable, or total degree; -1 for zero."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(exps) for exps in self._terms)
        i = var_index(var)
        return max(exps[i] for exps in self._terms)

    def min_degree(self, var: str) -> int:
        if not self._terms:
            return -1
        i = var_index(var)
        return min(exps[i] for exps in self._terms)

    def coefficient(
        self,
        monomial: Union[Mapping[str, int], Iterable[int]]
    ) -> Fraction:
        """Coefficient of a monomial given as {var: power} or a vector."""
        if isinstance(monomial, Mapping):
            exps = [0] * ARITY
            for name, power in monomial.items():
                exps[var_index(name)] = power
            key = tuple(exps)
        else:
            key = tuple(monomial)
            if len(key) != ARITY:
                raise KernelError(f"Monomial {key} has wrong arity")
        return self._terms.get(key, Fraction(0))

    def coeff_of(self, var: str, k: int) -> 'MultiPoly':
        """Coefficient of var^k, as a polynomial free of var."""
        i = var_index(var)
        out = {}
        for exps, c in self._terms.items():
            if exps[i] == k:
                out[exps[:i] + (0,) + exps[i + 1:]] = c
        return MultiPoly._wrap(out)

    def leading_term(self) -> Tuple[Exponent, Fraction]:
        """Largest term in graded lexicographic order."""
        if not self._terms:
            raise KernelError("Zero polynomial has no leading term")
        exps = max(self._terms, key=_graded_key)
        return exps, self._terms[exps]

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def has_integer_coefficients(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def homogeneous_degree(self, variables: Iterable[str]) -> Optional[int]:
        """Common degree in the given variables, or None if inhomogeneous."""
        idx = [var_index(v) for v in variables]
        degrees = {sum(exps[i] for i in idx) for exps in self._terms}
        if len(degrees) > 1:
            return None
        return degrees.pop() if degrees else 0

    # Arithmetic

    def __neg__(self) -> 'MultiPoly':
        return MultiPoly._wrap({e: -c for e, c in self._terms.items()})

    def __add__(self, other) -> 'MultiPoly':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for exps, c in small.items():
            value = out.get(exps, 0) + c
            if value:
                out[exps] = value
            else:
                out.pop(exps, None)
        return MultiPoly._wrap(out)

    __radd__ = __add__

    def __sub__(self, other) -> 'MultiPoly':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> 'MultiPoly':
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> 'MultiPoly':
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        out: Dict[Exponent, Fraction] = {}
        get = out.get
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(map(operator.add, e1, e2))
                out[exps] = get(exps, 0) + c1 * c2
        return MultiPoly._wrap({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> 'MultiPoly':
        factor = Fraction(factor)
        if not factor:
            return MultiPoly.zero()
        return MultiPoly._wrap(
            {e: c * factor for e, c in self._terms.items()}
        )

    def __truediv__(self, other) -> 'MultiPoly':
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if not other:
            raise DivisionByZeroError("Polynomial division by zero scalar")
        return self.scale(1 / Fraction(other))

    def __pow__(self, k: int) -> 'MultiPoly':
        if not isinstance(k, int) or k < 0:
            raise KernelError(f"Power must be a nonnegative integer, got {k}")
        result = MultiPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exps: Exponent) -> 'MultiPoly':
        """Multiply by the monomial with exponent vector exps."""
        return MultiPoly._wrap(
            {_add_exponents(e, exps): c for e, c in self._terms.items()}
        )

    def exact_div(self, other: 'MultiPoly') -> 'MultiPoly':
        """
        Exact quotient self / other.

        Raises:
            DivisionByZeroError: If other is zero
            NotDivisibleError: If other does not divide self
        """
        other = _coerce(other)
        if other is None or other.is_zero():
            raise DivisionByZeroError("Exact division by zero polynomial")
        if other.is_constant():
            return self / other.constant_term()
        lead_exps, lead_coeff = other.leading_term()
        quotient: Dict[Exponent, Fraction] = {}
        remainder = self
        while remainder:
            exps, coeff = remainder.leading_term()
            if any(a < b for a, b in zip(exps, lead_exps)):
                raise NotDivisibleError(
                    f"{other} does not divide {self}"
                )
            q_exps = tuple(a - b for a, b in zip(exps, lead_exps))
            q_coeff = coeff / lead_coeff
            quotient[q_exps] = q_coeff
            remainder = remainder - other.shift(q_exps).scale(q_coeff)
        return MultiPoly._wrap(quotient)

    # Substitution and evaluation

    def substitute(self, var: str, value) -> 'MultiPoly':
        """Replace a variable by a rational or a polynomial."""
        return self.substitute_many({var: value})

    def substitute_many(self, mapping: Mapping[str, object]) -> 'MultiPoly':
        """
        Simultaneous substitution of several variables.

        Args:
            mapping: variable name -> rational or MultiPoly
        """
        targets = []
        for name, value in mapping.items():
            value = _coerce(value)
            if value is None:
                raise KernelError(
                    f"Cannot substitute {type(mapping[name]).__name__} "
                    f"for '{name}'"
                )
            targets.append((var_index(name), value))
        powers: Dict[Tuple[int, int], MultiPoly] = {}
        out = MultiPoly.zero()
        grouped: Dict[Tuple, Dict[Exponent, Fraction]] = {}
        for exps, c in self._terms.items():
            base = list(exps)
            key = []
            for i, _ in targets:
                key.append(base[i])
                base[i] = 0
            bucket = grouped.setdefault(tuple(key), {})
            bucket[tuple(base)] = c
        for key, bucket in grouped.items():
            factor = MultiPoly.one()
            for (i, value), k in zip(targets, key):
                if k:
                    if (i, k) not in powers:
                        powers[(i, k)] = value ** k
                    factor = factor * powers[(i, k)]
            out = out + factor * MultiPoly._wrap(bucket)
        return out

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """
        Value at a rational point covering every variable that occurs.

        Raises:
            KernelError: If a variable of the polynomial has no value
        """
        missing = self.variables() - set(point)
        if missing:
            raise KernelError(
                f"Evaluation point is missing {sorted(missing)}"
            )
        values = [Fraction(point.get(name, 0)) for name in VARIABLES]
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for v, e in zip(values, exps):
                if e:
                    term *= v ** e
            total += term
        return total

    def truncate(self, var: str, below: int) -> 'MultiPoly':
        """Drop terms whose var-degree is at least `below`."""
        i = var_index(var)
        return MultiPoly._wrap(
            {e: c for e, c in self._terms.items() if e[i] < below}
        )

    # Comparison and rendering

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = _monomial_text(exps)
            magnitude = abs(c)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def _coerce(value) -> Optional[MultiPoly]:
    if isinstance(value, MultiPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return MultiPoly.constant(value)
    return None


def var(name: str, power: int = 1) -> MultiPoly:
    """Shorthand for MultiPoly.var."""
    return MultiPoly.var(name, power)
