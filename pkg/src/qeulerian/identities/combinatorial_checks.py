"""
Polynomial identities checked symbolically at size n: gamma-positivity,
the psi orbit identities, the secant specialization, the psi laws and
the basic equidistributions.
"""
import logging
from fractions import Fraction
from math import factorial

from .. import config
from ..core.exceptions import DecompositionError
from ..decomp import (
    MarkedPermutation, basic_decomposition, bi_basic_decomposition,
    canonical_marked, multiplicative_eval, omega_zero, orbit,
    orbit_canonicalize, psi_x,
)
from ..kernel import (
    MultiPoly, ordered_partition_inversions, qbinomial, qfactorial,
    rising_factorial,
)
from ..permstats import (
    Boundary, Permutation, StatWeight, classic_stats, distribution,
    enumerate_permutations, is_alternating, lma_letters, lmi_letters,
    quadruple_stats, rmi_letters,
)
from .closed_forms import euler_numbers
from .families import lhs_family, stirling_eulerian_at
from .gamma import gamma_extract
from .schemes import TruncationPolicy
from .verifiers import Check, verifier

logger = logging.getLogger(__name__)

ALPHA = MultiPoly.var('alpha')
BETA = MultiPoly.var('beta')
# below this size psi-laws also checks omega_0 multiplicativity per permutation
MULTIPLICATIVITY_MAX_N = 6


def _gamma_check(check: Check, n: int, h: MultiPoly, expected_at):
    """gamma-vector of h against expected_at(k), plus positivity."""
    gammas = gamma_extract(h, n - 1)
    peaks = lhs_family('gamma-p', n)
    check.require(
        'peak-range', peaks.degree('u2') <= (n - 1) // 2,
        f"peaks reach {peaks.degree('u2')}",
    )
    for k, gamma in enumerate(gammas):
        check.compare(f'gamma[{k}]', gamma, expected_at(peaks, k))
        scaled = gamma * Fraction(2) ** (n - 2 * k - 1)
        check.require(
            'positivity',
            gamma.is_nonnegative() and scaled.has_integer_coefficients(),
            f"gamma[{k}] = {gamma}",
        )


@verifier(
    'gamma-ab',
    "A_n(x,y|(a+b)/2,(a+b)/2) = sum 2^(2k+1-n) P_(n,k)(a,b) (xy)^k (x+y)^(n-1-2k)",
    uses_series=False,
)
def check_gamma_ab(check: Check, n: int, policy: TruncationPolicy):
    check.params['mode'] = 'symbolic'
    half = (ALPHA + BETA) * Fraction(1, 2)
    h = stirling_eulerian_at(n, half, half)
    _gamma_check(
        check, n, h,
        lambda peaks, k: peaks.coeff_of('u2', k) * Fraction(2) ** (2 * k + 1 - n),
    )


@verifier(
    'gamma-aa',
    "A_n(x,y|a,a) = sum 2^(2k+1-n) P_(n,k)(a,a) (xy)^k (x+y)^(n-1-2k)",
    uses_series=False,
)
def check_gamma_aa(check: Check, n: int, policy: TruncationPolicy):
    check.params['mode'] = 'symbolic'
    h = stirling_eulerian_at(n, ALPHA, ALPHA)
    _gamma_check(
        check, n, h,
        lambda peaks, k: (
            peaks.coeff_of('u2', k).substitute_many({'beta': ALPHA})
            * Fraction(2) ** (2 * k + 1 - n)
        ),
    )


def _check_orbits(check: Check, n: int):
    """
    Every orbit has one representative starting with 1, and its size, its
    minima count and its weight are fixed by that representative.
    """
    peak_boundary = Boundary.INF_INF
    covered = 0
    for p in enumerate_permutations(n):
        if p[0] != 1:
            continue
        r = len(rmi_letters(p))
        members = orbit(p)
        covered += len(members)
        check.require(
            'orbit-size', len(members) == 2 ** r,
            f"orbit of {p} has {len(members)} members, expected {2 ** r}",
        )
        peaks = quadruple_stats(p, peak_boundary).peaks
        total = MultiPoly.zero()
        for tau in members:
            lmi, rmi = lmi_letters(tau), rmi_letters(tau)
            total = total + ALPHA ** len(lmi) * BETA ** len(rmi) * 2 ** r
            check.require(
                'orbit-minima', len(lmi) + len(rmi) == r,
                f"{tau} in the orbit of {p} has {len(lmi) + len(rmi)} minima",
            )
            check.require(
                'orbit-peaks', quadruple_stats(tau, peak_boundary).peaks == peaks,
                f"{tau} and {p} differ in peaks",
            )
            check.require(
                'orbit-canonical', orbit_canonicalize(tau) == p,
                f"{tau} canonicalizes to {orbit_canonicalize(tau)}, not {p}",
            )
            marked = canonical_marked(MarkedPermutation(tau, lmi))
            check.require(
                'marked', marked.permutation == p and not marked.marks,
                f"Psi_S({tau}) = {marked}",
            )
        check.compare(
            'orbit-weight', total, ((ALPHA + BETA) * 2) ** r,
        )
    check.require(
        'orbit-cover', covered == factorial(n),
        f"orbits cover {covered} permutations",
    )


@verifier(
    'pk-lr',
    "sum over P_(n,k) of (2a)^(lmi-1) (2b)^(rmi-1) = sum of (a+b)^(lmi+rmi-2)",
    uses_series=False,
)
def check_pk_lr(check: Check, n: int, policy: TruncationPolicy):
    check.params['mode'] = 'symbolic'
    peaks = lhs_family('gamma-p', n)
    doubled = {'alpha': ALPHA * 2, 'beta': BETA * 2}
    merged = {'alpha': ALPHA + BETA, 'beta': ALPHA + BETA}
    for k in range(peaks.degree('u2') + 1):
        layer = peaks.coeff_of('u2', k)
        check.compare(
            f'layer[{k}]', layer.substitute_many(doubled), layer.substitute_many(merged)
        )
    orbits = n <= config.ORBIT_CHECK_MAX_N
    check.params['orbits'] = str(orbits).lower()
    if orbits:
        _check_orbits(check, n)


@verifier(
    'pk-lr2',
    "sum over P_(n,k) of a^(lmi-1) b^(rmi-1) = sum over L_(n-1,k) of (a+b)^rmi",
    uses_series=False,
)
def check_pk_lr2(check: Check, n: int, policy: TruncationPolicy):
    check.params['mode'] = 'symbolic'
    peaks = lhs_family('gamma-p', n)
    left = lhs_family('gamma-l', n - 1)
    merged = {'alpha': ALPHA + BETA}
    for k in range(max(peaks.degree('u2'), left.degree('u2')) + 1):
        check.compare(
            f'layer[{k}]',
            peaks.coeff_of('u2', k),
            left.coeff_of('u2', k).substitute_many(merged),
        )

    # sigma = 1 tau' with tau' a shifted copy of tau in S_(n-1)
    pivoted = 0
    for p in enumerate_permutations(n):
        if p[0] != 1:
            continue
        pivoted += 1
        tau = Permutation(v - 1 for v in p.word[1:])
        check.require(
            'pivot-peaks',
            quadruple_stats(p, Boundary.INF_INF).peaks
            == quadruple_stats(tau, Boundary.ZERO_INF).peaks,
            f"{p} and {tau} differ in peaks",
        )
        check.require(
            'pivot-rmi',
            classic_stats(p).rmi - 1 == classic_stats(tau).rmi,
            f"{p} and {tau} differ in right-to-left minima",
        )
    check.require(
        'pivot-bijection', pivoted == factorial(n - 1),
        f"{pivoted} permutations start with 1",
    )


@verifier(
    'secant',
    "A_(2j+1)(-1,1|a/2,a/2) = (-1)^j sum over alternating S_2j of a^rmi",
    min_n=0,
    uses_series=False,
)
def check_secant(check: Check, n: int, policy: TruncationPolicy):
    check.params['mode'] = 'symbolic'
    if n <= config.EULER_MAX_N:
        count = sum(1 for p in enumerate_permutations(n) if is_alternating(p))
        check.compare('euler', euler_numbers(n)[n], count)
    if n % 2 == 0:
        check.params['specialization'] = 'odd n only'
        return
    j = (n - 1) // 2
    half = ALPHA * Fraction(1, 2)
    lhs = stirling_eulerian_at(n, half, half).substitute_many({'x': -1, 'y': 1})
    rhs = lhs_family('secant', n - 1) * (-1) ** j
    check.compare('secant', lhs, rhs)


@verifier('psi-laws', "psi_x involution, commutation and minima swap", uses_series=False)
def check_psi_laws(check: Check, n: int, policy: TruncationPolicy):
    check.params['mode'] = 'exhaustive'
    multiplicative = n <= MULTIPLICATIVITY_MAX_N
    check.params['multiplicativity'] = str(multiplicative).lower()
    for p in enumerate_permutations(n):
        lmi, rmi = lmi_letters(p), rmi_letters(p)
        peaks = quadruple_stats(p, Boundary.INF_INF).peaks
        try:
            images = {x: psi_x(p, x) for x in range(1, n + 1)}
        except DecompositionError as e:
            check.require('gap', False, str(e))
            continue

        for x, image in images.items():
            check.require(
                'involution', psi_x(image, x) == p,
                f"psi_{x} twice moves {p} to {psi_x(image, x)}",
            )
            check.require(
                'peaks', quadruple_stats(image, Boundary.INF_INF).peaks == peaks,
                f"psi_{x}({p}) = {image} changes peaks",
            )
            if x in lmi:
                check.require(
                    'minima-swap', x in rmi_letters(image),
                    f"psi_{x}({p}) = {image} keeps {x} on the left",
                )
            elif x in rmi:
                check.require(
                    'minima-swap', x in lmi_letters(image),
                    f"psi_{x}({p}) = {image} keeps {x} on the right",
                )
            else:
                check.require(
                    'fixed', image == p, f"psi_{x} moves {p} to {image}",
                )
        for x in range(2, n + 1):
            for y in range(x + 1, n + 1):
                xy = psi_x(images[y], x)
                yx = psi_x(images[x], y)
                check.require(
                    'commutation', xy == yx,
                    f"psi_{x} psi_{y}({p}) = {xy} but psi_{y} psi_{x}({p}) = {yx}",
                )

        d = bi_basic_decomposition(p)
        check.require(
            'bi-basic', d.concat() == p
            and len(d.left_blocks) == len(lmi)
            and len(d.right_blocks) == len(rmi),
            f"bi-basic decomposition {d.format()} of {p}",
        )
        basic = basic_decomposition(p)
        check.require(
            'basic', basic.concat() == p and len(basic) == len(lma_letters(p)),
            f"basic decomposition {basic.format()} of {p}",
        )
        if multiplicative:
            check.compare('multiplicative', omega_zero(p), multiplicative_eval(omega_zero, p))


_EQUIDISTRIBUTED = {
    'stirling': ('lma', 'lmi', 'rma', 'rmi', 'cyc'),
    'eulerian': ('des', 'asc', 'exc'),
    'mahonian': ('inv', 'maj'),
}


@verifier('structure', "Statistic symmetries and classical distributions", min_n=0, uses_series=False)
def check_structure(check: Check, n: int, policy: TruncationPolicy):
    check.params['mode'] = 'exhaustive'
    boundaries = (Boundary.ZERO_ZERO, Boundary.INF_INF, Boundary.ZERO_INF, Boundary.INF_ZERO)
    top = n * (n - 1) // 2
    for p in enumerate_permutations(n):
        for boundary in boundaries:
            q = quadruple_stats(p, boundary)
            check.require(
                'partition', q.valleys + q.peaks + q.double_ascents + q.double_descents == n,
                f"{p} under {boundary}: {q.as_dict()}",
            )
        if n >= 1:
            zz = quadruple_stats(p, Boundary.ZERO_ZERO)
            check.require(
                'peaks-valleys', zz.peaks == zz.valleys + 1,
                f"{p} under (0,0): {zz.as_dict()}",
            )
        stats, reverse = classic_stats(p), classic_stats(p.reverse())
        check.require(
            'reversal', reverse.inv == top - stats.inv and reverse.rma == stats.lma,
            f"{p} reversed to {p.reverse()}",
        )

    zero_zero = (
        StatWeight('valleys', 'u1'), StatWeight('peaks', 'u2'),
        StatWeight('da', 'u3'), StatWeight('dd', 'u4'),
    )
    inf_inf = (
        StatWeight('peaks', 'u1'), StatWeight('valleys', 'u2'),
        StatWeight('dd', 'u3'), StatWeight('da', 'u4'),
    )
    check.compare(
        'boundary-swap',
        distribution(n, zero_zero, Boundary.ZERO_ZERO),
        distribution(n, inf_inf, Boundary.INF_INF),
    )

    expected = {
        'stirling': rising_factorial(n),
        'eulerian': distribution(n, (StatWeight('des', 'x'),)),
        'mahonian': qfactorial(n),
    }
    for kind, statistics in _EQUIDISTRIBUTED.items():
        variable = 'q' if kind == 'mahonian' else 'x'
        for statistic in statistics:
            check.compare(
                f'{kind}:{statistic}',
                distribution(n, (StatWeight(statistic, variable),)),
                expected[kind],
            )
    for k in range(n + 1):
        check.compare(f'qbinomial[{k}]', qbinomial(n, k), ordered_partition_inversions(n, k))
