"""Identity verifiers, their right-hand sides and the report model."""
from .schemes import (
    FREE_VARIABLES, SubstitutionScheme, TruncationPolicy, grid_schemes,
    random_scheme, sample_schemes, scheme_rng,
)
from .closed_forms import (
    BOTH, LEFT, RIGHT, F_classical, F_q, G_factor, carlitz_closed_form,
    classical_endpoint, euler_numbers, eulerian_closed_form, integral_form,
    inverse_q_adic, ji_closed_form, jires_closed_form, left_integrand,
    left_product, parint_pair, q_adic, stanley_closed_form,
)
from .families import (
    EULER_NUMBERS_FAMILY, FAMILIES, TABLE_FAMILIES, Family, get_family,
    lhs_family, stirling_eulerian_at,
)
from .gamma import gamma_extract, gamma_rebuild, is_symmetric
from .report import DegreeResidual, VerificationReport
from .verifiers import (
    Check, Verifier, default_samples, get_verifier, identity_ids,
    verifier, verify_identity,
)
# registration happens on import
from . import series_checks, combinatorial_checks  # noqa: F401,E402
from .series_checks import convolution_term, r_from_l

__all__ = [
    'FREE_VARIABLES', 'SubstitutionScheme', 'TruncationPolicy',
    'grid_schemes', 'random_scheme', 'sample_schemes', 'scheme_rng',
    'BOTH', 'LEFT', 'RIGHT', 'F_classical', 'F_q', 'G_factor',
    'carlitz_closed_form', 'classical_endpoint', 'euler_numbers',
    'eulerian_closed_form', 'integral_form', 'inverse_q_adic',
    'ji_closed_form', 'jires_closed_form', 'left_integrand', 'left_product',
    'parint_pair', 'q_adic', 'stanley_closed_form', 'EULER_NUMBERS_FAMILY',
    'FAMILIES', 'TABLE_FAMILIES', 'Family', 'get_family', 'lhs_family',
    'stirling_eulerian_at', 'gamma_extract', 'gamma_rebuild',
    'is_symmetric', 'DegreeResidual', 'VerificationReport', 'Check',
    'Verifier', 'default_samples', 'get_verifier', 'identity_ids',
    'verifier', 'verify_identity', 'convolution_term', 'r_from_l',
]
