"""Permutations, boundary conditions, statistics and their distributions."""
from .permutation import (
    Permutation, check_size, enumerate_permutations, format_word,
)
from .statistics import (
    Boundary, Quadruple, Sentinel, StatProfile, classic_stats,
    is_alternating, lma_letters, lmi_letters, quadruple_stats, rmi_letters,
)
from .distribution import (
    CLASSIC_STATISTICS, QUADRUPLE_STATISTICS, STATISTICS, StatWeight,
    distribution, is_basic, monomial_exponents,
)

__all__ = [
    'Permutation', 'check_size', 'enumerate_permutations', 'format_word',
    'Boundary', 'Quadruple', 'Sentinel', 'StatProfile', 'classic_stats',
    'is_alternating', 'lma_letters', 'lmi_letters', 'quadruple_stats',
    'rmi_letters', 'CLASSIC_STATISTICS', 'QUADRUPLE_STATISTICS',
    'STATISTICS', 'StatWeight', 'distribution', 'is_basic',
    'monomial_exponents',
]
