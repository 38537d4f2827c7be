"""Block decompositions, multiplicative functions and the psi actions."""
from .blocks import (
    BasicDecomposition, BiBasicDecomposition, basic_decomposition,
    bi_basic_decomposition, format_blocks, red,
)
from .multiplicative import (
    OMEGA_ZERO_WEIGHTS, lma_weight, multiplicative_eval, omega_zero,
)
from .psi import (
    MarkedPermutation, canonical_marked, marked_action, orbit,
    orbit_canonicalize, psi_action, psi_x,
)

__all__ = [
    'BasicDecomposition', 'BiBasicDecomposition', 'basic_decomposition',
    'bi_basic_decomposition', 'format_blocks', 'red',
    'OMEGA_ZERO_WEIGHTS', 'lma_weight', 'multiplicative_eval', 'omega_zero',
    'MarkedPermutation', 'canonical_marked', 'marked_action', 'orbit',
    'orbit_canonicalize', 'psi_action', 'psi_x',
]
