"""Truncated t-series over pluggable rings and the q-calculus on them."""
from .rings import (
    Ring, RingTag, RingCapabilities, RationalRing, QRatFuncRing,
    MultiPolyRing, LaurentRing,
)
from .series import (
    TSeries, series_inverse, series_log, series_exp, series_power,
    series_scale, series_shift, series_derivative, series_integral,
)
from .qcalculus import (
    delta_t, exp_q_series, to_divided, from_divided, bracket_power,
    bracket_powers_divided, q_compose, q_compose_divided, product_expansion,
    scaled_derivative, q_integral, Q_DIRECTION, Q_INVERSE_DIRECTION,
)

__all__ = [
    'Ring', 'RingTag', 'RingCapabilities', 'RationalRing', 'QRatFuncRing',
    'MultiPolyRing', 'LaurentRing', 'TSeries', 'series_inverse', 'series_log',
    'series_exp', 'series_power', 'series_scale', 'series_shift',
    'series_derivative', 'series_integral', 'delta_t', 'exp_q_series',
    'to_divided', 'from_divided', 'bracket_power', 'bracket_powers_divided',
    'q_compose', 'q_compose_divided', 'product_expansion',
    'scaled_derivative', 'q_integral', 'Q_DIRECTION', 'Q_INVERSE_DIRECTION',
]
