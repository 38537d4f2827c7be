"""
Right-hand sides: the classical F(x,y;t), its q-analog F(x,y,u,q;t), the
factors G_k of the infinite product, the integral-form endpoint and the
Euler numbers.
"""
import logging
from fractions import Fraction
from math import factorial
from typing import List, Optional

from .. import config
from ..core.exceptions import GuardError, SeriesError
from ..kernel import ARITY, LaurentPolyQ, MultiPoly, QRatFunc
from ..kernel.alphabet import Q_INDEX
from ..qseries import (
    Q_DIRECTION, Q_INVERSE_DIRECTION, LaurentRing, MultiPolyRing,
    QRatFuncRing, RationalRing, Ring, TSeries, exp_q_series,
    product_expansion, q_integral, series_exp, series_integral,
    series_inverse, series_log, series_power, series_scale, series_shift,
)
from .schemes import SubstitutionScheme

logger = logging.getLogger(__name__)

LEFT = 'left'
RIGHT = 'right'
BOTH = 'both'


def exp_series(ring: Ring, c, order: int) -> TSeries:
    """e^(c t) with rational coefficients."""
    c = Fraction(c)
    return TSeries(ring, [c ** m / factorial(m) for m in range(order + 1)])


def F_classical(s: SubstitutionScheme, order: int) -> TSeries:
    """(e^(xt) - e^(yt)) / (x e^(yt) - y e^(xt)) over the rationals."""
    ring = RationalRing()
    ex = exp_series(ring, s.x, order)
    ey = exp_series(ring, s.y, order)
    return (ex - ey) * series_inverse(ey * s.x - ex * s.y)


def F_q(
    u: Fraction,
    s: SubstitutionScheme,
    order: int,
    invert: bool = False
) -> TSeries:
    """
    u1 (exp_q((x-u)t) - exp_q((y-u)t)) / (x exp_q((y-u)t) - y exp_q((x-u)t))
    with q symbolic; invert=True returns the same series at 1/q.
    """
    ring = QRatFuncRing()
    ex = exp_q_series(ring, s.x - Fraction(u), order)
    ey = exp_q_series(ring, s.y - Fraction(u), order)
    out = (ex - ey) * series_inverse(ey * s.x - ex * s.y) * s.u1
    if invert:
        out = out.map(lambda c: c.invert_q())
    return out


def classical_endpoint(s: SubstitutionScheme, order: int) -> TSeries:
    """
    e^((u3 alpha + u4 beta) t) ((x - y) / (x e^(yt) - y e^(xt)))^(alpha + beta),
    the q -> 1 value of the integral form.
    """
    ring = RationalRing()
    rate = s.u3 * s.alpha + s.u4 * s.beta
    ex = exp_series(ring, s.x, order)
    ey = exp_series(ring, s.y, order)
    base = series_inverse(ey * s.x - ex * s.y) * (s.x - s.y)
    return exp_series(ring, rate, order) * series_power(base, s.alpha + s.beta)


jires_closed_form = classical_endpoint


def ji_closed_form(s: SubstitutionScheme, order: int) -> TSeries:
    """
    (1 + yF)^((alpha+beta)/2) (1 + xF)^((alpha+beta)/2)
    e^((beta - alpha)(u4 - u3) t / 2).
    """
    ring = RationalRing()
    F = F_classical(s, order)
    half = (s.alpha + s.beta) / 2
    rate = (s.beta - s.alpha) * (s.u4 - s.u3) / 2
    return (
        series_power(F * s.y + 1, half)
        * series_power(F * s.x + 1, half)
        * exp_series(ring, rate, order)
    )


def carlitz_closed_form(s: SubstitutionScheme, order: int) -> TSeries:
    """(1 + xF)^alpha (1 + yF)^beta."""
    F = F_classical(s, order)
    return series_power(F * s.x + 1, s.alpha) * series_power(F * s.y + 1, s.beta)


def stanley_closed_form(x: Fraction, order: int) -> TSeries:
    """(1 - x) / (1 - x exp_q(t (1 - x))) with q symbolic."""
    ring = QRatFuncRing()
    x = Fraction(x)
    e = exp_q_series(ring, 1 - x, order)
    return series_inverse(1 - e * x) * (1 - x)


def eulerian_closed_form(x: Fraction, order: int) -> TSeries:
    """(1 - x) / (1 - x e^((1 - x) t))."""
    ring = RationalRing()
    x = Fraction(x)
    e = exp_series(ring, 1 - x, order)
    return series_inverse(1 - e * x) * (1 - x)


def parint_pair(s: SubstitutionScheme, order: int):
    """
    Both sides of int_0^t x y F(z) dz = ln((x - y) / (x e^(yt) - y e^(xt))).

    Returns:
        (integral side, logarithm side)
    """
    ring = RationalRing()
    F = F_classical(s, order)
    integral = series_integral(F * (s.x * s.y))
    ex = exp_series(ring, s.x, order + 1)
    ey = exp_series(ring, s.y, order + 1)
    log_side = series_log(series_inverse(ey * s.x - ex * s.y) * (s.x - s.y))
    return integral, log_side


def integral_form(s: SubstitutionScheme, order: int) -> TSeries:
    """
    exp of the sum of two q-integrals: the d_q integral of
    t^-1 ln(1 - (1 - q) t H)^-1 / (1 - q), H = alpha (u3 + u2 F(qt)), and
    the d_(1/q) integral of t^-1 ln(1 - (q - 1) t G)^-1 / (1 - 1/q),
    G = beta (u4 + u2 F~(t)) with F~ the series at 1/q and u3 for u.
    """
    ring = QRatFuncRing()
    if order == 0:
        return TSeries.constant(ring, ring.one(), 0)
    one_minus_q = ring.one() - ring.q()
    one_minus_inverse = ring.one() - ring.q_power(-1)

    F = F_q(s.u4, s, order)
    H = (series_scale(F, 1, 1) * s.u2 + s.u3) * s.alpha
    left_log = -series_log(1 - series_shift(H * one_minus_q, 1).truncate(order))
    left = q_integral(
        series_shift(left_log, -1).map(lambda c: c / one_minus_q), Q_DIRECTION
    )

    F_tilde = F_q(s.u3, s, order, invert=True)
    G = (F_tilde * s.u2 + s.u4) * s.beta
    right_log = -series_log(1 - series_shift(G * (-one_minus_q), 1).truncate(order))
    right = q_integral(
        series_shift(right_log, -1).map(lambda c: c / one_minus_inverse),
        Q_INVERSE_DIRECTION,
    )
    return series_exp(left + right)


# Expansions of q-rational coefficients in a degree window


def q_adic(c: QRatFunc, window: int) -> MultiPoly:
    """sum_(j < window) c_j q^j for c regular at q = 0."""
    coeffs = c.q_expansion(window)
    return MultiPoly({
        _q_exponent(j): v for j, v in enumerate(coeffs) if v
    })


def inverse_q_adic(c: QRatFunc, window: int) -> LaurentPolyQ:
    """sum_(j < window) c'_j q^(-j) where c(q) = sum c'_j q^(-j) near q = inf."""
    coeffs = c.invert_q().q_expansion(window)
    return LaurentPolyQ({-j: v for j, v in enumerate(coeffs) if v})


def _q_exponent(j: int):
    exps = [0] * ARITY
    exps[Q_INDEX] = j
    return tuple(exps)


def _value(ring: Ring, value: Optional[Fraction], name: str):
    if value is None:
        return ring.lift(MultiPoly.var(name))
    return ring.lift(value)


def left_integrand(
    s: SubstitutionScheme,
    order: int,
    window: int,
    ring: Optional[Ring] = None
) -> TSeries:
    """
    alpha (u3 + u2 F(x,y,u4,q; qt)) with F expanded q-adically below the
    window; this is f'(t) for the first bracket family.
    """
    ring = ring or MultiPolyRing(q_window=window)
    F = F_q(s.u4, s, order)
    lifted = TSeries(ring, [ring.lift(q_adic(c, window)) for c in F.coeffs])
    alpha = _value(ring, s.alpha, 'alpha')
    return (series_scale(lifted, 1, 1) * s.u2 + s.u3) * alpha


def left_product(s: SubstitutionScheme, order: int, window: int) -> TSeries:
    """prod_(k < window) of the first brackets, exact in q-degrees < window."""
    ring = MultiPolyRing(q_window=window)
    fprime = left_integrand(s, order, window, ring)
    return product_expansion(
        lambda k: series_scale(fprime, 1, k), window, order, ring
    )


def G_factor(
    k: int,
    s: SubstitutionScheme,
    order: int,
    window: int,
    part: str = BOTH
) -> TSeries:
    """
    The k-th factor of the main product as a Laurent-in-q series.

    The first bracket is expanded q-adically (q-degrees < window), the
    second q^-1-adically (q-degrees > -window - order).

    Args:
        k: Factor index, k >= 0
        s: Scheme; alpha or beta left as None stay symbolic
        order: Truncation order in t
        window: Depth of the q and q^-1 expansions
        part: 'left', 'right' or 'both'

    Raises:
        SeriesError: On a negative index or an unknown part
    """
    if k < 0:
        raise SeriesError(f"G_factor needs k >= 0, got {k}")
    if part not in (LEFT, RIGHT, BOTH):
        raise SeriesError(f"Unknown G_factor part '{part}'")
    lo = -(window + order)
    hi = window - 1 if part == LEFT else None
    ring = LaurentRing(lo=lo if part != LEFT else None, hi=hi)
    one_minus_q = ring.one() - ring.q()
    out = TSeries.constant(ring, ring.one(), order)

    if part in (LEFT, BOTH):
        F = F_q(s.u4, s, order)
        lifted = TSeries(
            ring, [LaurentPolyQ.from_multipoly(q_adic(c, window)) for c in F.coeffs]
        )
        alpha = _value(ring, s.alpha, 'alpha')
        inner = series_scale(lifted, 1, k + 1) * s.u2 + s.u3
        bracket = _one_minus_t_times(
            inner * (alpha * ring.q_power(k) * one_minus_q), order, ring
        )
        out = out * series_inverse(bracket)

    if part in (RIGHT, BOTH):
        F_tilde = F_q(s.u3, s, order, invert=True)
        lifted = TSeries(
            ring, [inverse_q_adic(c, window + order) for c in F_tilde.coeffs]
        )
        beta = _value(ring, s.beta, 'beta')
        inner = series_scale(lifted, 1, -k) * s.u2 + s.u4
        bracket = _one_minus_t_times(
            inner * (beta * ring.q_power(-k) * (ring.q() - ring.one())),
            order,
            ring,
        )
        out = out * series_inverse(bracket)
    return out


def _one_minus_t_times(h: TSeries, order: int, ring: Ring) -> TSeries:
    """1 - t h(t) truncated at order."""
    coeffs = [ring.one()] + [ring.zero()] * order
    for m in range(min(order - 1, h.order) + 1):
        coeffs[m + 1] = -h[m]
    return TSeries(ring, coeffs)


def euler_numbers(count: int) -> List[int]:
    """
    E_0 .. E_count from sec t + tan t = (1 + sin t) / cos t.

    Raises:
        GuardError: If count exceeds EULER_MAX_N
    """
    limit = config.EULER_MAX_N
    if count < 0 or count > limit:
        raise GuardError(f"Euler numbers are limited to N <= {limit}, got {count}")
    ring = RationalRing()
    cos = []
    sin = []
    for m in range(count + 1):
        sign = -1 if (m // 2) % 2 else 1
        value = Fraction(sign, factorial(m))
        cos.append(value if m % 2 == 0 else Fraction(0))
        sin.append(value if m % 2 == 1 else Fraction(0))
    one_plus_sin = TSeries(ring, sin) + 1
    series = one_plus_sin * series_inverse(TSeries(ring, cos))
    out = []
    for m in range(count + 1):
        value = series[m] * factorial(m)
        if value.denominator != 1:
            raise SeriesError(f"Euler number E_{m} came out as {value}")
        out.append(int(value))
    return out
