"""Multiplicative functions evaluated through the basic decomposition."""
from typing import Callable

from ..kernel import MultiPoly
from ..permstats import Boundary, Permutation, StatWeight, monomial_exponents
from .blocks import basic_decomposition, red

BaseFunction = Callable[[Permutation], MultiPoly]

OMEGA_ZERO_WEIGHTS = (
    StatWeight('valleys', 'u1'),
    StatWeight('peaks', 'u2'),
    StatWeight('da', 'u3'),
    StatWeight('dd', 'u4'),
    StatWeight('lma', 'alpha'),
)


def multiplicative_eval(base: BaseFunction, p: Permutation) -> MultiPoly:
    """prod base(red(beta_i)) over the basic blocks beta_i of p."""
    out = MultiPoly.one()
    for block in basic_decomposition(p).blocks:
        out = out * base(red(block))
    return out


def omega_zero(p: Permutation) -> MultiPoly:
    """u1^V u2^M u3^da u4^dd alpha^lma with sentinels (0, inf)."""
    return MultiPoly(
        {monomial_exponents(p, OMEGA_ZERO_WEIGHTS, Boundary.ZERO_INF): 1}
    )


def lma_weight(p: Permutation) -> MultiPoly:
    """x^lma."""
    return MultiPoly({monomial_exponents(p, (StatWeight('lma', 'x'),)): 1})
