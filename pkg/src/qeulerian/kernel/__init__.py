"""Exact arithmetic kernel: polynomials, Laurent polynomials, q-rational functions."""
from .alphabet import VARIABLES, ARITY, var_index
from .multipoly import MultiPoly
from .laurent import LaurentPolyQ
from .upoly import UPoly
from .ratfunc import QRatFunc
from .qnumbers import (
    qint, qfactorial, qbinomial, rising_factorial, q_power,
    ordered_partition_inversions,
)

__all__ = [
    'VARIABLES', 'ARITY', 'var_index', 'MultiPoly', 'LaurentPolyQ', 'UPoly',
    'QRatFunc', 'qint', 'qfactorial', 'qbinomial', 'rising_factorial',
    'q_power', 'ordered_partition_inversions',
]
