"""
Unit tests for truncated t-series and the q-calculus on them.
"""
import math
import pytest
import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import given, settings, strategies as st

# Add src to path
project_root = Path(__file__).parent.parent.parent
src_path = project_root / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from qeulerian.core.exceptions import CapabilityError, SeriesError
from qeulerian.kernel import MultiPoly, QRatFunc, UPoly, qfactorial, qint
from qeulerian.qseries import (
    Q_DIRECTION, Q_INVERSE_DIRECTION, LaurentRing, MultiPolyRing, QRatFuncRing,
    RationalRing, TSeries, bracket_power, delta_t, exp_q_series,
    from_divided, product_expansion, q_compose, q_integral,
    scaled_derivative, series_exp, series_inverse, series_log,
    series_integral, series_power, series_scale, series_shift, to_divided,
)


def t_series(ring, order):
    """The series t."""
    return TSeries.monomial(ring, 1, 1, order)


def q_adic(value: QRatFunc, window: int) -> MultiPoly:
    out = MultiPoly.zero()
    for k, c in enumerate(value.q_expansion(window)):
        out = out + MultiPoly.var('q', k) * c
    return out


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def rational_series(order):
    """Series over the rationals at q = 1."""
    return st.lists(fractions, min_size=order + 1, max_size=order + 1).map(
        lambda cs: TSeries(RationalRing(), cs)
    )


def q_series(order):
    """Series whose coefficients are linear in q."""
    linear = st.tuples(fractions, st.integers(-3, 3)).map(
        lambda ab: MultiPoly.constant(ab[0]) + MultiPoly.var('q') * ab[1]
    )
    return st.lists(linear, min_size=order + 1, max_size=order + 1).map(
        lambda cs: TSeries(QRatFuncRing(), cs)
    )


class TestTSeries:
    """Test TSeries arithmetic and the classical calculus."""

    def test_binary_ops_truncate_to_smaller_order(self):
        """Sums and products keep the smaller order."""
        ring = RationalRing()
        a = TSeries(ring, [1, 1, 1, 1])
        b = TSeries(ring, [1, 2])
        assert (a + b).order == 1
        assert (a * b).order == 1

    def test_ring_mismatch(self):
        """Series over different rings do not mix."""
        with pytest.raises(SeriesError):
            TSeries(RationalRing(), [1, 1]) + TSeries(QRatFuncRing(), [1, 1])

    def test_empty_series(self):
        """A series needs at least one coefficient."""
        with pytest.raises(SeriesError):
            TSeries(RationalRing(), [])

    def test_coefficient_beyond_order(self):
        """Reading past the truncation order is an error."""
        with pytest.raises(SeriesError):
            TSeries(RationalRing(), [1, 2]).coefficient(2)

    def test_inverse(self):
        """1/(1 - t) = 1 + t + t^2 + ..."""
        ring = RationalRing()
        inv = series_inverse(TSeries(ring, [1, -1, 0, 0]))
        assert list(inv.coeffs) == [1, 1, 1, 1]

    @pytest.mark.parametrize("ring", [MultiPolyRing(), MultiPolyRing(q_window=3), LaurentRing()])
    def test_inverse_of_rational_constant(self, ring):
        """A nonzero rational constant term inverts without ring division."""
        f = TSeries(ring, [2, 1, 0, 0])
        inv = series_inverse(f)
        assert inv[0] == ring.from_scalar(Fraction(1, 2))
        assert inv * f == TSeries.constant(ring, 1, 3)

    def test_inverse_of_negative_fraction(self):
        """-3/4 + q t inverts over polynomials."""
        ring = MultiPolyRing()
        f = TSeries(ring, [Fraction(-3, 4), MultiPoly.var('q'), 0])
        assert series_inverse(f) * f == TSeries.constant(ring, 1, 2)

    @pytest.mark.parametrize("ring", [MultiPolyRing(), LaurentRing()])
    def test_inverse_needs_unit(self, ring):
        """A constant term involving q, or zero, cannot be inverted without division."""
        with pytest.raises(SeriesError):
            series_inverse(TSeries(ring, [ring.q(), 1]))
        with pytest.raises(SeriesError):
            series_inverse(TSeries(ring, [0, 1]))

    def test_exp_of_log(self):
        """exp(log(1 + t)) == 1 + t."""
        ring = RationalRing()
        f = TSeries(ring, [1, 1, 0, 0, 0])
        assert series_exp(series_log(f)) == f

    def test_log_needs_unit_constant(self):
        """log requires constant term 1; exp requires constant term 0."""
        ring = RationalRing()
        with pytest.raises(SeriesError):
            series_log(TSeries(ring, [2, 1]))
        with pytest.raises(SeriesError):
            series_exp(TSeries(ring, [1, 1]))

    def test_exp_coefficients(self):
        """exp(t) has coefficients 1/m!."""
        ring = RationalRing()
        e = series_exp(t_series(ring, 5))
        assert list(e.coeffs) == [Fraction(1, math.factorial(m)) for m in range(6)]

    def test_rational_power(self):
        """(1 + t)^(1/2) squares back to 1 + t."""
        ring = RationalRing()
        f = TSeries(ring, [1, 1, 0, 0, 0])
        root = series_power(f, Fraction(1, 2))
        assert root * root == f

    def test_scale(self):
        """t -> 2 q t multiplies t^m by 2^m q^m."""
        ring = QRatFuncRing()
        f = TSeries(ring, [1, 1, 1])
        scaled = series_scale(f, 2, 1)
        assert scaled[2] == QRatFunc.q_power(2) * 4

    def test_shift(self):
        """Shifting by t^-1 needs a vanishing constant term."""
        ring = RationalRing()
        assert list(series_shift(TSeries(ring, [0, 1, 2]), -1).coeffs) == [1, 2]
        assert series_shift(TSeries(ring, [1]), 2).order == 2
        with pytest.raises(SeriesError):
            series_shift(TSeries(ring, [1, 1]), -1)


class TestQCalculus:
    """Test delta_t, exp_q, bracket powers, q-composition and q-integrals."""

    def test_exp_q(self):
        """exp_q(t) = 1 + t + t^2/(1 + q) + O(t^3)."""
        e = exp_q_series(QRatFuncRing(), 1, 2)
        assert e[0] == 1
        assert e[1] == 1
        assert e[2] == QRatFunc(UPoly([1]), UPoly([1, 1]))

    def test_exp_q_at_one(self):
        """At q = 1 exp_q is the classical exponential."""
        e = exp_q_series(RationalRing(Fraction(1)), 1, 4)
        assert list(e.coeffs) == [Fraction(1, math.factorial(m)) for m in range(5)]

    def test_exp_q_needs_division(self):
        """exp_q divides by q-factorials."""
        with pytest.raises(CapabilityError):
            exp_q_series(MultiPolyRing(), 1, 3)

    def test_delta_t(self):
        """delta_t t^2 = [2]_q t."""
        ring = QRatFuncRing()
        d = delta_t(TSeries.monomial(ring, 1, 2, 3))
        assert d[1] == QRatFunc.from_multipoly(qint(2))
        assert d.order == 2

    def test_delta_t_of_exp_q(self):
        """exp_q is a fixed point of delta_t."""
        ring = QRatFuncRing()
        e = exp_q_series(ring, 1, 4)
        assert delta_t(e) == e.truncate(3)

    def test_bracket_power(self):
        """t^[3] = t^3/[3]_q!."""
        ring = QRatFuncRing()
        cube = bracket_power(t_series(ring, 3), 3)
        assert cube[3] == QRatFunc.constant(1) / qfactorial(3)
        assert all(cube[m].is_zero() for m in range(3))

    def test_bracket_power_needs_zero_constant(self):
        """f(0) must vanish."""
        ring = QRatFuncRing()
        with pytest.raises(SeriesError):
            bracket_power(TSeries(ring, [1, 1]), 2)

    def test_compose_with_t(self):
        """g[t] == g."""
        ring = QRatFuncRing()
        g = exp_q_series(ring, Fraction(2, 3), 4)
        assert q_compose(g, t_series(ring, 4)) == g

    def test_divided_basis(self):
        """from_divided undoes to_divided."""
        ring = QRatFuncRing()
        g = exp_q_series(ring, 3, 4)
        assert list(to_divided(g).coeffs) == [QRatFunc.constant(3 ** m) for m in range(5)]
        assert from_divided(to_divided(g)) == g

    def test_q_integral_directions(self):
        """int t d_q = t^2/[2]_q and int t d_(1/q) = q t^2/[2]_q."""
        ring = QRatFuncRing()
        t = t_series(ring, 2)
        half = QRatFunc.constant(1) / qint(2)
        assert q_integral(t, Q_DIRECTION)[2] == half
        assert q_integral(t, Q_INVERSE_DIRECTION)[2] == half * QRatFunc.q()

    def test_q_integral_unknown_direction(self):
        """Only the two directions exist."""
        with pytest.raises(SeriesError):
            q_integral(t_series(QRatFuncRing(), 2), 'sideways')

    def test_product_expansion_of_exp_q(self):
        """exp_q(t) agrees with its product form below q^K."""
        window = 4
        order = 4
        ring = MultiPolyRing(q_window=window)
        product = product_expansion(
            scaled_derivative(t_series(ring, order)), window, order, ring
        )
        for n in range(order + 1):
            expected = q_adic(QRatFunc.constant(1) / qfactorial(n), window)
            assert product[n] == expected

    def test_product_expansion_needs_factors(self):
        """K must be positive."""
        ring = MultiPolyRing(q_window=2)
        with pytest.raises(SeriesError):
            product_expansion(scaled_derivative(t_series(ring, 2)), 0, 2, ring)

    @given(q_series(6))
    @settings(max_examples=15, deadline=None)
    def test_delta_t_of_bracket_power(self, f):
        """delta_t f^[k] = delta_t(f) f^[k-1] for k <= 6."""
        f = f - f[0]
        d = delta_t(f)
        for k in range(1, 7):
            assert delta_t(bracket_power(f, k)) == d * bracket_power(f, k - 1)

    @given(q_series(5))
    @settings(max_examples=25, deadline=None)
    def test_delta_t_undoes_q_integral(self, f):
        """delta_t inverts the d_q integral, and conjugating by q -> 1/q the d_(1/q) one."""
        assert delta_t(q_integral(f, Q_DIRECTION)) == f
        flip = lambda c: c.invert_q()  # noqa: E731
        inverse_integral = q_integral(f, Q_INVERSE_DIRECTION).map(flip)
        assert delta_t(inverse_integral) == f.map(flip)


class TestClassicalLimit:
    """At q = 1 the q-calculus is the calculus of exponential generating functions."""

    @given(rational_series(5), rational_series(5))
    @settings(max_examples=20, deadline=None)
    def test_compose(self, g, f):
        """g[f] = sum_n g_n f^n."""
        ring = RationalRing()
        f = f - f[0]
        classical = TSeries.zero(ring, 5)
        power = TSeries.constant(ring, 1, 5)
        for n in range(6):
            classical = classical + power * g[n]
            power = power * f
        assert q_compose(g, f) == classical

    @given(fractions)
    @settings(max_examples=20, deadline=None)
    def test_exp(self, c):
        """exp_q(c t) = exp(c t)."""
        ring = RationalRing()
        assert exp_q_series(ring, c, 6) == series_exp(TSeries.monomial(ring, c, 1, 6))

    @given(rational_series(5))
    @settings(max_examples=20, deadline=None)
    def test_integral(self, f):
        """Both q-integrals are the ordinary integral."""
        assert q_integral(f, Q_DIRECTION) == series_integral(f)
        assert q_integral(f, Q_INVERSE_DIRECTION) == series_integral(f)
