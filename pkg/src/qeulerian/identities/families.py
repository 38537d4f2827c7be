"""
Named enumeration families: the left-hand sides of the identities, each
a weighted distribution over S_n.
"""
import logging
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple

from ..core.cache import cached
from ..core.exceptions import GuardError, UnknownFamilyError
from ..kernel import MultiPoly
from ..permstats import (
    Boundary, Permutation, StatWeight, distribution, is_alternating,
)

logger = logging.getLogger(__name__)

W = StatWeight

_QUAD_ZERO_ZERO = (
    W('valleys', 'u1'), W('peaks', 'u2', 1), W('da', 'u3'), W('dd', 'u4'),
)
_QUAD_PLAIN = (
    W('valleys', 'u1'), W('peaks', 'u2'), W('da', 'u3'), W('dd', 'u4'),
)
_STIRLING_EULERIAN = (
    W('asc', 'x'), W('des', 'y'), W('lma', 'alpha', 1), W('rma', 'beta', 1),
)


@dataclass(frozen=True)
class Family:
    name: str
    description: str
    weights: Tuple[StatWeight, ...]
    boundary: Optional[Boundary] = None
    basic_only: bool = False
    where: Optional[Callable[[Permutation], bool]] = None
    min_n: int = 0


FAMILIES: Dict[str, Family] = {f.name: f for f in (
    Family('eulerian', "A_n(x) = sum x^des", (W('des', 'x'),)),
    Family(
        'stanley', "sum x^(des+1) q^inv",
        (W('des', 'x', -1), W('inv', 'q')), min_n=1,
    ),
    Family(
        'bivariate-eulerian', "A_n(x,y) = sum x^asc y^des",
        (W('asc', 'x'), W('des', 'y')),
    ),
    Family(
        'stirling-eulerian',
        "A_n(x,y|alpha,beta) = sum x^asc y^des alpha^(lma-1) beta^(rma-1)",
        _STIRLING_EULERIAN, min_n=1,
    ),
    Family(
        'carlitz2', "sum u1^V u2^(M-1) u3^da u4^dd, sentinels (0,0)",
        _QUAD_ZERO_ZERO, Boundary.ZERO_ZERO, min_n=1,
    ),
    Family(
        'pan-zeng', "sum u1^V u2^M u3^da u4^dd q^inv, sentinels (inf,inf)",
        _QUAD_PLAIN + (W('inv', 'q'),), Boundary.INF_INF,
    ),
    Family(
        'ji', "P_n = sum u1^V u2^(M-1) u3^da u4^dd alpha^(lma-1) beta^(rma-1)",
        _QUAD_ZERO_ZERO + (W('lma', 'alpha', 1), W('rma', 'beta', 1)),
        Boundary.ZERO_ZERO, min_n=1,
    ),
    Family(
        'p-q', "P_n with q^inv",
        _QUAD_ZERO_ZERO + (
            W('lma', 'alpha', 1), W('rma', 'beta', 1), W('inv', 'q'),
        ),
        Boundary.ZERO_ZERO, min_n=1,
    ),
    Family(
        'l', "L_n = sum u1^V u2^M u3^da u4^dd alpha^lma q^inv, sentinels (0,inf)",
        _QUAD_PLAIN + (W('lma', 'alpha'), W('inv', 'q')), Boundary.ZERO_INF,
    ),
    Family(
        'b', "B_n = L_n restricted to basic permutations",
        _QUAD_PLAIN + (W('lma', 'alpha'), W('inv', 'q')), Boundary.ZERO_INF,
        basic_only=True,
    ),
    Family(
        'r', "R_n = sum u1^V u2^M u3^da u4^dd beta^rma q^inv, sentinels (inf,0)",
        _QUAD_PLAIN + (W('rma', 'beta'), W('inv', 'q')), Boundary.INF_ZERO,
    ),
    Family(
        'gamma-p',
        "sum u2^M alpha^(lmi-1) beta^(rmi-1), sentinels (inf,inf)",
        (W('peaks', 'u2'), W('lmi', 'alpha', 1), W('rmi', 'beta', 1)),
        Boundary.INF_INF, min_n=1,
    ),
    Family(
        'gamma-l', "sum u2^M alpha^rmi, sentinels (0,inf)",
        (W('peaks', 'u2'), W('rmi', 'alpha')), Boundary.ZERO_INF,
    ),
    Family(
        'secant', "sum over alternating permutations of alpha^rmi",
        (W('rmi', 'alpha'),), where=is_alternating,
    ),
    Family('stirling', "sum x^lma = (x)_n", (W('lma', 'x'),)),
    Family('mahonian', "sum q^inv = [n]_q!", (W('inv', 'q'),)),
)}

EULER_NUMBERS_FAMILY = 'euler-numbers'
TABLE_FAMILIES = tuple(sorted(FAMILIES)) + (EULER_NUMBERS_FAMILY,)


def get_family(name: str) -> Family:
    """
    Raises:
        UnknownFamilyError: If the family is not registered
    """
    family = FAMILIES.get(name)
    if family is None:
        raise UnknownFamilyError(
            f"Unknown family '{name}'; known: {', '.join(TABLE_FAMILIES)}"
        )
    return family


@cached('families')
def lhs_family(name: str, n: int) -> MultiPoly:
    """Exact polynomial of a named family at size n."""
    family = get_family(name)
    if n < family.min_n:
        raise GuardError(
            f"Family '{name}' starts at n = {family.min_n}, got {n}"
        )
    logger.debug(f"Enumerating family {name} at n={n}")
    return distribution(
        n,
        family.weights,
        boundary=family.boundary,
        basic_only=family.basic_only,
        where=family.where,
    )


def stirling_eulerian_at(n: int, alpha, beta) -> MultiPoly:
    """A_n(x, y | alpha, beta) with alpha, beta replaced by polynomials."""
    return lhs_family('stirling-eulerian', n).substitute_many(
        {'alpha': alpha, 'beta': beta}
    )
