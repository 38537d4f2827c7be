"""
Generating-function identities: enumeration on the left, a truncated
series on the right, compared at one t-degree per report.
"""
import logging
from fractions import Fraction
from math import comb, factorial

from ..kernel import LaurentPolyQ, MultiPoly, QRatFunc, qbinomial, qfactorial
from ..permstats import StatWeight, distribution
from ..qseries import (
    MultiPolyRing, TSeries, product_expansion, q_compose_divided,
    scaled_derivative, to_divided,
)
from .closed_forms import (
    F_classical, F_q, LEFT, RIGHT, G_factor, carlitz_closed_form,
    eulerian_closed_form, integral_form, ji_closed_form,
    jires_closed_form, left_product, parint_pair, stanley_closed_form,
)
from .families import get_family, lhs_family
from .schemes import TruncationPolicy, random_rational, scheme_rng
from .verifiers import Check, verifier

logger = logging.getLogger(__name__)

QUAD_VARIABLES = ('x', 'y', 'u3', 'u1')
WITH_ALPHA = QUAD_VARIABLES + ('alpha',)
WITH_ALPHA_BETA = QUAD_VARIABLES + ('alpha', 'beta')

# direct product checks are the slowest; cap their scheme count
DIRECT_SAMPLES = 3
# a random f for the product formula has degree at most this
GESSEL_DEGREE = 3


def _ratfunc(poly: MultiPoly) -> QRatFunc:
    return QRatFunc.from_multipoly(poly)


def _qfact(n: int) -> QRatFunc:
    return _ratfunc(qfactorial(n))


@verifier('eulerian-egf', "1 + sum x A_n(x) t^n/n! = (1-x)/(1-x e^((1-x)t))", min_n=0)
def check_eulerian_egf(check: Check, n: int, policy: TruncationPolicy):
    lhs_poly = MultiPoly.one() if n == 0 else MultiPoly.var('x') * lhs_family('eulerian', n)
    for i, s in enumerate(check.schemes(policy, None, ('x',), avoid_x=(Fraction(1),))):
        rhs = eulerian_closed_form(s.x, n)[n] * factorial(n)
        check.compare('egf', lhs_poly.evaluate({'x': s.x}), rhs, sample=i)


@verifier(
    'stanley',
    "1 + sum x^(des+1) q^inv t^n/[n]_q! = (1-x)/(1-x exp_q(t(1-x)))",
    min_n=0,
)
def check_stanley(check: Check, n: int, policy: TruncationPolicy):
    lhs_poly = MultiPoly.one() if n == 0 else lhs_family('stanley', n)
    for i, s in enumerate(check.schemes(policy, None, ('x',), avoid_x=(Fraction(1),))):
        lhs = _ratfunc(lhs_poly.substitute_many({'x': s.x}))
        rhs = stanley_closed_form(s.x, n)[n] * _qfact(n)
        check.compare('q-egf', lhs, rhs, sample=i)


@verifier(
    'carlitz',
    "sum A_(n+1)(x,y|alpha,beta) t^n/n! = (1+xF)^alpha (1+yF)^beta",
    shift=1,
)
def check_carlitz(check: Check, n: int, policy: TruncationPolicy):
    m = n - 1
    poly = lhs_family('stirling-eulerian', n)
    variables = ('x', 'y', 'alpha', 'beta')
    for i, s in enumerate(check.schemes(policy, None, variables)):
        lhs = poly.evaluate(s.values())
        rhs = carlitz_closed_form(s, m)[m] * factorial(m)
        check.compare('egf', lhs, rhs, sample=i)


@verifier(
    'carlitz2',
    "sum u1^V u2^(M-1) u3^da u4^dd t^n/n! = F(x,y;t), sentinels (0,0)",
)
def check_carlitz2(check: Check, n: int, policy: TruncationPolicy):
    poly = lhs_family('carlitz2', n)
    for i, s in enumerate(check.schemes(policy, None, QUAD_VARIABLES)):
        rhs = F_classical(s, n)[n] * factorial(n)
        check.compare('egf', poly.evaluate(s.values()), rhs, sample=i)


@verifier(
    'pan-zeng',
    "sum u1^V u2^M u3^da u4^dd q^inv t^n/[n]_q! = F(x,y,u4,q;t), sentinels (inf,inf)",
)
def check_pan_zeng(check: Check, n: int, policy: TruncationPolicy):
    poly = lhs_family('pan-zeng', n)
    for i, s in enumerate(check.schemes(policy, None, QUAD_VARIABLES)):
        raw = F_q(s.u4, s, n)[n] * _qfact(n)
        check.compare('q-egf', _ratfunc(s.specialize(poly)), raw, sample=i)
        check.require(
            'polynomial', raw.is_polynomial(),
            f"[n]_q! F_n has denominator {raw.den}", sample=i,
        )


@verifier(
    'ji',
    "sum P_(n+1) t^n/n! = (1+yF)^((a+b)/2) (1+xF)^((a+b)/2) e^((b-a)(u4-u3)t/2)",
    shift=1,
)
def check_ji(check: Check, n: int, policy: TruncationPolicy):
    m = n - 1
    poly = lhs_family('ji', n)
    for i, s in enumerate(check.schemes(policy, None, WITH_ALPHA_BETA)):
        rhs = ji_closed_form(s, m)[m] * factorial(m)
        check.compare('egf', poly.evaluate(s.values()), rhs, sample=i)


def _random_series(rng, order: int, ring: MultiPolyRing) -> TSeries:
    coeffs = [Fraction(0)] + [random_rational(rng) for _ in range(GESSEL_DEGREE)]
    coeffs = (coeffs + [Fraction(0)] * order)[:order + 1]
    return TSeries(ring, coeffs)


@verifier(
    'gessel-product',
    "exp_q[f] = prod_k (1 - t q^k (1-q) f'(q^k t))^-1 in q-degrees < K",
    samples=50,
)
def check_gessel_product(check: Check, n: int, policy: TruncationPolicy):
    K = policy.q_window
    ring = MultiPolyRing(q_window=K)
    count = policy.sample_count or 50
    rng = scheme_rng(policy.seed, check.identity, n)
    check.params.update({'mode': 'random', 'samples': str(count), 'q_window': str(K)})
    for i in range(count):
        f = _random_series(rng, n, ring)
        composed = q_compose_divided([1] * (n + 1), to_divided(f))
        product = product_expansion(scaled_derivative(f), K, n, ring)
        rhs = ring.truncate(product[n] * qfactorial(n))
        check.compare('exp_q', composed[n], rhs, sample=i)


_LMA_WEIGHTS = (StatWeight('lma', 'x'), StatWeight('inv', 'q'))


def _lma_family(m: int, basic: bool) -> MultiPoly:
    return distribution(m, _LMA_WEIGHTS, basic_only=basic)


def _omega_zero_family(m: int, basic: bool) -> MultiPoly:
    return lhs_family('b' if basic else 'l', m)


MULTIPLICATIVE_FAMILIES = (('x^lma', _lma_family), ('omega0', _omega_zero_family))


@verifier(
    'gessel-multiplicative',
    "sum_n omega(S_n) t^n/[n]_q! = exp_q[sum_n omega(basic S_n) t^n/[n]_q!]",
)
def check_gessel_multiplicative(check: Check, n: int, policy: TruncationPolicy):
    ring = MultiPolyRing()
    check.params['mode'] = 'symbolic'
    for label, family in MULTIPLICATIVE_FAMILIES:
        basic = TSeries(
            ring, [MultiPoly.zero()] + [family(m, True) for m in range(1, n + 1)]
        )
        composed = q_compose_divided([1] * (n + 1), basic)
        check.compare(label, family(n, False), composed[n])


def _ln_formula(check: Check, n: int, window: int, schemes, prefix: str = ''):
    """L_n against the left product, exact modulo q^window."""
    poly = lhs_family('l', n)
    check.params[f'{prefix}q_window'] = str(window)
    check.params[f'{prefix}conclusive'] = str(window > comb(n, 2)).lower()
    for i, s in enumerate(schemes):
        lhs = s.specialize(poly).truncate('q', window)
        rhs = (left_product(s, n, window)[n] * qfactorial(n)).truncate('q', window)
        check.compare(f'{prefix}product', lhs, rhs, sample=i)


@verifier(
    'ln-formula',
    "sum L_n t^n/[n]_q! = prod_k (1 - t alpha q^k (1-q)(u3 + u2 F(q^(k+1) t)))^-1",
    min_n=0,
)
def check_ln_formula(check: Check, n: int, policy: TruncationPolicy):
    schemes = check.schemes(policy, None, WITH_ALPHA)
    _ln_formula(check, n, policy.q_window, schemes)


def r_from_l(n: int) -> MultiPoly:
    """q^C(n,2) L_n(u4, u3, beta, 1/q)."""
    swapped = lhs_family('l', n).substitute_many({
        'u3': MultiPoly.var('u4'),
        'u4': MultiPoly.var('u3'),
        'alpha': MultiPoly.var('beta'),
    })
    return LaurentPolyQ.from_multipoly(swapped).invert_q().shift(comb(n, 2)).to_multipoly()


def _rn_formula(check: Check, n: int, prefix: str = ''):
    check.compare(f'{prefix}reversal', lhs_family('r', n), r_from_l(n))


@verifier(
    'rn-formula',
    "R_n(u3,u4,beta,q) = q^C(n,2) L_n(u4,u3,beta,1/q)",
    min_n=0,
    uses_series=False,
)
def check_rn_formula(check: Check, n: int, policy: TruncationPolicy):
    check.params['mode'] = 'symbolic'
    _rn_formula(check, n)


def convolution_term(m: int, k: int) -> MultiPoly:
    """[m, k]_q q^(m-k) L_k R_(m-k)."""
    return (
        qbinomial(m, k) * MultiPoly.var('q', m - k)
        * lhs_family('l', k) * lhs_family('r', m - k)
    )


def _convolution(check: Check, n: int, prefix: str = ''):
    """P_n(q) split by the position of n against the L/R convolution."""
    m = n - 1
    family = get_family('p-q')
    total = MultiPoly.zero()
    for k in range(m + 1):
        term = convolution_term(m, k)
        total = total + term
        split = distribution(
            n, family.weights, family.boundary,
            where=lambda p, k=k: p[k] == n,
        )
        check.compare(f'{prefix}split[{k}]', split, term)
    check.compare(f'{prefix}total', lhs_family('p-q', n), total)


@verifier(
    'convolution',
    "P_(n+1) = sum_k [n,k]_q q^(n-k) L_k R_(n-k)",
    shift=1,
    uses_series=False,
)
def check_convolution(check: Check, n: int, policy: TruncationPolicy):
    check.params['mode'] = 'symbolic'
    _convolution(check, n)


def _direct_products(check: Check, m: int, window: int, schemes):
    """
    Both brackets of the main product against L_m and q^m R_m. The left
    side is exact below q^window, the right side above q^(m-window+C(m,2)).
    """
    C = comb(m, 2)
    right_lo = m - window + C + 1
    check.params['right_conclusive'] = str(window >= C + 1).lower()
    check.params['right_window'] = f"q^{right_lo}.."
    qfact = LaurentPolyQ.from_multipoly(qfactorial(m))
    L = lhs_family('l', m)
    R = lhs_family('r', m)
    for i, s in enumerate(schemes):
        left = G_factor(0, s, m, window, LEFT)
        right = G_factor(0, s, m, window, RIGHT)
        for k in range(1, window):
            left = left * G_factor(k, s, m, window, LEFT)
            right = right * G_factor(k, s, m, window, RIGHT)
        got_left = (left[m] * qfact).window(None, window - 1)
        want_left = LaurentPolyQ.from_multipoly(s.specialize(L)).window(None, window - 1)
        check.compare('direct-left', got_left, want_left, sample=i)
        got_right = (right[m] * qfact).window(right_lo, None)
        want_right = LaurentPolyQ.from_multipoly(s.specialize(R)).shift(m).window(right_lo, None)
        check.compare('direct-right', got_right, want_right, sample=i)


@verifier(
    'main',
    "sum P_(n+1) t^n/[n]_q! = prod_k of both brackets",
    shift=1,
)
def check_main(check: Check, n: int, policy: TruncationPolicy):
    """
    The ln-formula, the reversal rule and the convolution together prove
    the product at t^(n-1); the direct expansion is a redundant check.
    """
    m = n - 1
    K = policy.q_window
    schemes = check.schemes(policy, None, WITH_ALPHA_BETA)
    _ln_formula(check, m, K, schemes, prefix='ln-formula/')
    _rn_formula(check, m, prefix='rn-formula/')
    _convolution(check, n, prefix='convolution/')
    _direct_products(check, m, K, schemes[:DIRECT_SAMPLES])


@verifier(
    'main2',
    "sum P_(n+1) t^n/[n]_q! = exp(q-integral + (1/q)-integral)",
    samples=10,
    shift=1,
)
def check_main2(check: Check, n: int, policy: TruncationPolicy):
    m = n - 1
    poly = lhs_family('p-q', n)
    classical = lhs_family('ji', n)
    parint_order = max(8, policy.t_order)
    check.params['parint_order'] = str(parint_order)
    for i, s in enumerate(check.schemes(policy, 10, WITH_ALPHA_BETA)):
        coefficient = integral_form(s, m)[m]
        rhs = coefficient * _qfact(m)
        check.compare('integral-form', _ratfunc(s.specialize(poly)), rhs, sample=i)
        check.compare('q-one', coefficient.evaluate(1), ji_closed_form(s, m)[m], sample=i)

        integral, log_side = parint_pair(s, parint_order)
        check.compare_series('parint', integral, log_side, sample=i)

        endpoint = jires_closed_form(s, m)[m]
        check.compare('endpoint-ji', endpoint, ji_closed_form(s, m)[m], sample=i)
        check.compare(
            'endpoint-enumeration', endpoint * factorial(m),
            classical.evaluate(s.values()), sample=i,
        )
