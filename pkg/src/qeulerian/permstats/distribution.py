"""
Polynomial-valued distributions of statistics over S_n.

Each permutation contributes one monomial prod var^(stat - offset); the
exponent vectors are counted in a plain dict and turned into a MultiPoly
once at the end.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from ..core.exceptions import StatisticError
from ..kernel import ARITY, MultiPoly, var_index
from .permutation import Permutation, enumerate_permutations
from .statistics import Boundary, classic_stats, quadruple_stats

logger = logging.getLogger(__name__)

CLASSIC_STATISTICS = (
    'inv', 'maj', 'des', 'asc', 'exc', 'cyc', 'lma', 'lmi', 'rma', 'rmi',
)
QUADRUPLE_STATISTICS = ('valleys', 'peaks', 'da', 'dd')
STATISTICS = CLASSIC_STATISTICS + QUADRUPLE_STATISTICS


@dataclass(frozen=True)
class StatWeight:
    """
    statistic - offset becomes the exponent of variable.

    Several weights may target the same variable; their exponents add.
    """

    statistic: str
    variable: str
    offset: int = 0

    def __post_init__(self):
        if self.statistic not in STATISTICS:
            raise StatisticError(
                f"Unknown statistic '{self.statistic}'; "
                f"expected one of {', '.join(STATISTICS)}"
            )
        var_index(self.variable)

    @property
    def index(self) -> int:
        return var_index(self.variable)

    def __str__(self) -> str:
        if self.offset > 0:
            return f"{self.statistic}-{self.offset}->{self.variable}"
        if self.offset < 0:
            return f"{self.statistic}+{-self.offset}->{self.variable}"
        return f"{self.statistic}->{self.variable}"


def is_basic(p: Permutation) -> bool:
    """p begins with its greatest element."""
    return len(p) > 0 and p[0] == len(p)


def monomial_exponents(
    p: Permutation,
    weights: Sequence[StatWeight],
    boundary: Optional[Boundary] = None
):
    """
    Exponent vector contributed by one permutation.

    Raises:
        StatisticError: On a negative exponent or a quadruple statistic
            requested without a boundary
    """
    profile = classic_stats(p).as_dict()
    if boundary is not None:
        profile.update(quadruple_stats(p, boundary).as_dict())
    exps = [0] * ARITY
    for weight in weights:
        if weight.statistic not in profile:
            raise StatisticError(
                f"Statistic '{weight.statistic}' needs a boundary condition"
            )
        value = profile[weight.statistic] - weight.offset
        if value < 0:
            raise StatisticError(
                f"Weight {weight} gives negative exponent {value} on {p}"
            )
        exps[weight.index] += value
    return tuple(exps)


def distribution(
    n: int,
    weights: Sequence[StatWeight],
    boundary: Optional[Boundary] = None,
    basic_only: bool = False,
    where: Optional[Callable[[Permutation], bool]] = None
) -> MultiPoly:
    """
    Sum over S_n of the weighted monomials.

    Args:
        n: Permutation size (guarded)
        weights: Statistic to variable assignments
        boundary: Sentinels for the quadruple statistics
        basic_only: Restrict to permutations beginning with n
        where: Extra filter on permutations

    Returns:
        Exact generating polynomial
    """
    needs_boundary = any(w.statistic in QUADRUPLE_STATISTICS for w in weights)
    if needs_boundary and boundary is None:
        raise StatisticError(
            "Quadruple statistics need a boundary condition"
        )
    counts = Counter()
    for p in enumerate_permutations(n):
        if basic_only and not is_basic(p):
            continue
        if where is not None and not where(p):
            continue
        counts[monomial_exponents(p, weights, boundary)] += 1
    logger.debug(
        f"distribution n={n} weights=[{', '.join(map(str, weights))}] "
        f"boundary={boundary}: {len(counts)} monomials"
    )
    return MultiPoly(counts)
