"""gamma-vectors of symmetric homogeneous polynomials in x and y."""
from typing import List, Optional

from ..core.exceptions import KernelError
from ..kernel import MultiPoly

_X = MultiPoly.var('x')
_Y = MultiPoly.var('y')


def is_symmetric(h: MultiPoly) -> bool:
    return h.substitute_many({'x': _Y, 'y': _X}) == h


def gamma_extract(h: MultiPoly, degree: Optional[int] = None) -> List[MultiPoly]:
    """
    gamma_0 .. gamma_(d // 2) with h = sum gamma_k (xy)^k (x + y)^(d - 2k).

    Coefficients may involve the other alphabet variables. gamma_k is read
    off x^(d-k) y^k once the layers below k have been subtracted.

    Args:
        h: Symmetric polynomial, homogeneous in x and y
        degree: Expected degree d; inferred from h when omitted

    Raises:
        KernelError: If h is not symmetric or not homogeneous of degree d
    """
    found = h.homogeneous_degree(('x', 'y'))
    if found is None:
        raise KernelError(f"{h} is not homogeneous in x and y")
    if degree is None:
        degree = found
    elif not h.is_zero() and found != degree:
        raise KernelError(f"{h} has degree {found} in x and y, expected {degree}")
    if not is_symmetric(h):
        raise KernelError(f"{h} is not symmetric in x and y")

    xy = _X * _Y
    x_plus_y = _X + _Y
    rest = h
    gammas = []
    for k in range(degree // 2 + 1):
        gamma = rest.coeff_of('x', degree - k).coeff_of('y', k)
        gammas.append(gamma)
        if not gamma.is_zero():
            rest = rest - gamma * xy ** k * x_plus_y ** (degree - 2 * k)
    if not rest.is_zero():
        raise KernelError(f"gamma elimination left a remainder {rest}")
    return gammas


def gamma_rebuild(gammas: List[MultiPoly], degree: int) -> MultiPoly:
    xy = _X * _Y
    x_plus_y = _X + _Y
    out = MultiPoly.zero()
    for k, gamma in enumerate(gammas):
        out = out + gamma * xy ** k * x_plus_y ** (degree - 2 * k)
    return out
