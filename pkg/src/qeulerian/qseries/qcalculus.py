"""
q-calculus on truncated series: the Eulerian differential operator,
exp_q, bracket powers f^[k], q-composition, the infinite-product
expansion of exp_q[f], and q-integration.

Series written in the divided basis store g_n for g = sum g_n t^n/[n]_q!;
the divided-basis routines only multiply, so they work over rings without
division (polynomial identities), while the standard-basis wrappers divide
by [n]_q!.
"""
import logging
from typing import Callable, List, Sequence

from ..core.exceptions import SeriesError
from .rings import Ring
from .series import TSeries, series_inverse, series_scale

logger = logging.getLogger(__name__)

Q_DIRECTION = 'q'
Q_INVERSE_DIRECTION = 'q-inverse'


def delta_t(f: TSeries) -> TSeries:
    """
    (f(qt) - f(t)) / ((q - 1) t), acting as t^(m+1) -> [m+1]_q t^m.

    Raises:
        SeriesError: If the series has order 0
    """
    if f.order < 1:
        raise SeriesError("delta_t needs a series of order >= 1")
    ring = f.ring
    return TSeries(ring, [f[m + 1] * ring.qint(m + 1) for m in range(f.order)])


def exp_q_series(ring: Ring, c, order: int) -> TSeries:
    """sum_n c^n t^n / [n]_q! up to t^order."""
    ring.require('exp_q_series', has_division=True)
    c = ring.lift(c)
    out = []
    power = ring.one()
    for n in range(order + 1):
        out.append(ring.div(power, ring.qfactorial(n)))
        power = power * c
    return TSeries(ring, out)


def to_divided(f: TSeries) -> TSeries:
    """Coefficients of f in the basis t^n/[n]_q!."""
    ring = f.ring
    return TSeries(ring, [f[n] * ring.qfactorial(n) for n in range(f.order + 1)])


def from_divided(d: TSeries) -> TSeries:
    """Inverse of to_divided; needs division."""
    ring = d.ring
    ring.require('from_divided', has_division=True)
    return TSeries(
        ring, [ring.div(d[n], ring.qfactorial(n)) for n in range(d.order + 1)]
    )


def bracket_powers_divided(fd: TSeries, kmax: int) -> List[TSeries]:
    """
    f^[0] .. f^[kmax] in the divided basis, from the recursion
    f^(k)_(n+1) = sum_i [n, i]_q f^(1)_(n-i+1) f^(k-1)_i.

    Raises:
        SeriesError: If f has a nonzero constant term
    """
    ring = fd.ring
    if not ring.is_zero(fd[0]):
        raise SeriesError("Bracket powers need f(0) = 0")
    order = fd.order
    powers = [TSeries.constant(ring, ring.one(), order)]
    if kmax >= 1:
        powers.append(fd)
    for k in range(2, kmax + 1):
        prev = powers[-1]
        out = [ring.zero()]
        for n in range(order):
            acc = ring.zero()
            # f^(k-1)_i vanishes for i < k-1
            for i in range(k - 1, n + 1):
                if ring.is_zero(prev[i]) or ring.is_zero(fd[n - i + 1]):
                    continue
                acc = acc + ring.qbinomial(n, i) * fd[n - i + 1] * prev[i]
            out.append(acc)
        powers.append(TSeries(ring, out))
    return powers


def bracket_power(f: TSeries, k: int) -> TSeries:
    """f^[k] in the standard basis."""
    if k < 0:
        raise SeriesError(f"Bracket power index must be >= 0, got {k}")
    if not f.ring.is_zero(f[0]):
        raise SeriesError("Bracket powers need f(0) = 0")
    if k == 0:
        return TSeries.constant(f.ring, f.ring.one(), f.order)
    return from_divided(bracket_powers_divided(to_divided(f), k)[k])


def q_compose_divided(g_divided: Sequence, fd: TSeries) -> TSeries:
    """
    g[f] = sum_n g_n f^[n] with every series in the divided basis.

    Args:
        g_divided: g_0, g_1, ... (coefficients of t^n/[n]_q!)
        fd: f in the divided basis, f(0) = 0
    """
    ring = fd.ring
    kmax = min(len(g_divided) - 1, fd.order)
    powers = bracket_powers_divided(fd, kmax)
    out = TSeries.zero(ring, fd.order)
    for n in range(kmax + 1):
        g_n = ring.lift(g_divided[n])
        if ring.is_zero(g_n):
            continue
        out = out + powers[n] * g_n
    return out


def q_compose(g: TSeries, f: TSeries) -> TSeries:
    """
    q-composition g[f] with both series in the standard basis.

    Raises:
        SeriesError: If f(0) != 0
    """
    if not f.ring.is_zero(f[0]):
        raise SeriesError("q-composition needs f(0) = 0")
    order = min(g.order, f.order)
    g_div = to_divided(g.truncate(order))
    composed = q_compose_divided(list(g_div.coeffs), to_divided(f.truncate(order)))
    return from_divided(composed)


def scaled_derivative(f: TSeries) -> Callable[[int], TSeries]:
    """k -> f'(q^k t), the factor family consumed by product_expansion."""
    fprime = delta_t(f)

    def at(k: int) -> TSeries:
        return series_scale(fprime, 1, k)

    return at


def product_expansion(
    fprime: Callable[[int], TSeries],
    factors: int,
    order: int,
    ring: Ring
) -> TSeries:
    """
    prod_{k < factors} (1 - t q^k (1 - q) f'(q^k t))^(-1) up to t^order.

    Factor k only touches q-degrees >= k, so every coefficient agrees with
    the infinite product in q-degrees below `factors`.

    Args:
        fprime: k -> f'(q^k t) as a series of order >= order - 1
        factors: Number of factors K
        order: Truncation order N
        ring: Coefficient ring with a q variable
    """
    ring.require('product_expansion', has_q_variable=True)
    if factors < 1:
        raise SeriesError(f"product_expansion needs K >= 1, got {factors}")
    one_minus_q = ring.one() - ring.q()
    result = TSeries.constant(ring, ring.one(), order)
    for k in range(factors):
        fp = fprime(k)
        scale = ring.q_power(k) * one_minus_q
        coeffs = [ring.one()] + [ring.zero()] * order
        for m in range(min(order - 1, fp.order) + 1):
            coeffs[m + 1] = -(fp[m] * scale)
        factor = series_inverse(TSeries(ring, coeffs))
        result = result * factor
    logger.debug(
        f"product_expansion: {factors} factors, order {order}, "
        f"ring {ring.describe()}"
    )
    return result


def q_integral(f: TSeries, direction: str = Q_DIRECTION) -> TSeries:
    """
    Integral from 0 to t: t^m -> t^(m+1)/[m+1]_q for d_q and
    t^m -> q^m t^(m+1)/[m+1]_q for d_(1/q).

    Raises:
        SeriesError: On an unknown direction
    """
    ring = f.ring
    ring.require('q_integral', has_division=True)
    if direction not in (Q_DIRECTION, Q_INVERSE_DIRECTION):
        raise SeriesError(f"Unknown q-integral direction '{direction}'")
    out = [ring.zero()]
    for m in range(f.order + 1):
        value = ring.div(f[m], ring.qint(m + 1))
        if direction == Q_INVERSE_DIRECTION:
            value = value * ring.q_power(m)
        out.append(value)
    return TSeries(ring, out)
