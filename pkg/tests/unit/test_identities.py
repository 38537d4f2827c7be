"""
Unit tests for substitution schemes, closed forms, gamma-vectors,
named families, the verifier registry and verification reports.
"""
import logging
import math
import pytest
import sys
from fractions import Fraction
from pathlib import Path

from pydantic import ValidationError

# Add src to path
project_root = Path(__file__).parent.parent.parent
src_path = project_root / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from qeulerian.core.exceptions import (
    ConfigurationError, DegenerateSchemeError, GuardError, KernelError,
    SeriesError, UnknownFamilyError, UnknownIdentityError,
)
from qeulerian.identities import (
    Check, DegreeResidual, SubstitutionScheme, TruncationPolicy,
    VerificationReport, carlitz_closed_form, euler_numbers,
    eulerian_closed_form, G_factor, gamma_extract, gamma_rebuild,
    get_family, get_verifier, grid_schemes, identity_ids, integral_form,
    is_symmetric, ji_closed_form, lhs_family, parint_pair, q_adic,
    sample_schemes, stirling_eulerian_at,
)
from qeulerian.kernel import MultiPoly, QRatFunc, UPoly

X = MultiPoly.var('x')
Y = MultiPoly.var('y')
ALPHA = MultiPoly.var('alpha')
BETA = MultiPoly.var('beta')

SPEC_IDS = {
    'eulerian-egf', 'stanley', 'carlitz', 'carlitz2', 'pan-zeng', 'ji',
    'gessel-product', 'gessel-multiplicative', 'ln-formula', 'rn-formula',
    'convolution', 'main', 'main2', 'gamma-ab', 'gamma-aa', 'pk-lr',
    'pk-lr2', 'secant',
}


class TestSchemes:
    """Test substitution schemes and truncation policies."""

    def test_side_conditions(self):
        """u4 and u2 are derived from x + y = u3 + u4 and x y = u1 u2."""
        s = SubstitutionScheme(x=2, y=-3, u3=Fraction(1, 2), u1=3)
        assert s.u4 == Fraction(-3, 2)
        assert s.u2 == -2
        values = s.values()
        assert values['x'] + values['y'] == values['u3'] + values['u4']
        assert values['x'] * values['y'] == values['u1'] * values['u2']

    def test_degenerate(self):
        """x = y and u1 = 0 are refused."""
        with pytest.raises(DegenerateSchemeError):
            SubstitutionScheme(x=1, y=1)
        with pytest.raises(DegenerateSchemeError):
            SubstitutionScheme(x=1, y=2, u1=0)

    def test_float_coercion(self):
        """Floats become exact fractions."""
        assert SubstitutionScheme(x=0.5, y=2).x == Fraction(1, 2)

    def test_symbolic_variables_left_out(self):
        """symbolic= keeps variables out of the substitution."""
        s = SubstitutionScheme(x=2, y=3, alpha=5)
        assert 'alpha' not in s.values(symbolic=('alpha',))
        assert s.specialize(X * ALPHA, symbolic=('alpha',)) == ALPHA * 2

    def test_default_policy(self):
        """N = n_max and K = C(n_max, 2) + 1."""
        policy = TruncationPolicy.default(4)
        assert policy.t_order == 4
        assert policy.q_window == 7
        assert TruncationPolicy.default(4, q_window=2).q_window == 2

    def test_policy_validation(self):
        """Orders below 1 are invalid."""
        with pytest.raises(ValidationError):
            TruncationPolicy(t_order=0, q_window=1)

    def test_sampling_is_deterministic(self):
        """The same seed, id and n give the same schemes."""
        policy = TruncationPolicy(t_order=3, q_window=4, seed=7)
        a = sample_schemes('carlitz', 3, policy, 5)
        b = sample_schemes('carlitz', 3, policy, 5)
        c = sample_schemes('carlitz', 4, policy, 5)
        assert a == b
        assert a != c
        assert len(a) == 5

    def test_avoid_x(self):
        """Sampled schemes never hit an excluded x value."""
        policy = TruncationPolicy(t_order=3, q_window=4, sample_count=40)
        drawn = sample_schemes('eulerian-egf', 3, policy, 40, ('x',), avoid_x=(Fraction(1),))
        assert all(s.x != 1 for s in drawn)

    def test_grid(self):
        """A size-3 grid over two variables has nine distinct points."""
        points = list(grid_schemes(3, ('x', 'y')))
        assert len(points) == 9
        assert len({(s.x, s.y) for s in points}) == 9

    def test_grid_fallback_warns(self, caplog):
        """Grid mode above its size limit falls back to random draws."""
        policy = TruncationPolicy(t_order=9, q_window=4, exhaustive_grid=True)
        with caplog.at_level(logging.WARNING):
            drawn = sample_schemes('carlitz', 9, policy, 3)
        assert len(drawn) == 3
        assert "exhaustive grid" in caplog.text


class TestClosedForms:
    """Test closed forms against direct enumeration."""

    @pytest.mark.parametrize("x", [Fraction(2), Fraction(-1, 3)])
    def test_eulerian_egf(self, x):
        """n! [t^n] of the closed form is 1 for n = 0 and x A_n(x) after."""
        series = eulerian_closed_form(x, 5)
        assert series[0] == 1
        for n in range(1, 6):
            expected = x * lhs_family('eulerian', n).evaluate({'x': x})
            assert series[n] * math.factorial(n) == expected

    def test_carlitz(self):
        """[t^1] of the Carlitz form is A_2 = x alpha + y beta."""
        s = SubstitutionScheme(x=2, y=-1, alpha=3, beta=Fraction(1, 2))
        series = carlitz_closed_form(s, 2)
        assert series[1] == Fraction(2 * 3 - Fraction(1, 2))

    def test_parint(self):
        """Both sides of the integral identity agree."""
        s = SubstitutionScheme(x=2, y=-3)
        integral, log_side = parint_pair(s, 4)
        assert integral.truncate(4) == log_side.truncate(4)

    @pytest.mark.parametrize("s", [
        SubstitutionScheme(x=2, y=-1, u3=1, u1=3, alpha=Fraction(1, 2), beta=2),
        SubstitutionScheme(x=Fraction(-1, 3), y=4, u3=-2, u1=1, alpha=3, beta=Fraction(2, 5)),
    ])
    def test_integral_form_at_q_one(self, s):
        """The integral form at q = 1 is the classical ji form."""
        integral = integral_form(s, 3)
        classical = ji_closed_form(s, 3)
        for m in range(4):
            assert integral[m].evaluate(1) == classical[m]

    def test_euler_numbers(self):
        """E_0 .. E_5 = 1, 1, 1, 2, 5, 16."""
        assert euler_numbers(5) == [1, 1, 1, 2, 5, 16]

    def test_euler_numbers_guard(self):
        """Indices beyond the guard are refused."""
        with pytest.raises(GuardError):
            euler_numbers(13)

    def test_q_adic(self):
        """1/(1 - q) truncates to 1 + q + q^2 in a window of 3."""
        c = QRatFunc(UPoly([1]), UPoly([1, -1]))
        assert str(q_adic(c, 3)) == "1 + q + q^2"

    def test_G_factor_validation(self):
        """Negative indices and unknown parts are rejected."""
        s = SubstitutionScheme(x=2, y=-3, alpha=1, beta=1)
        with pytest.raises(SeriesError):
            G_factor(-1, s, 2, 2)
        with pytest.raises(SeriesError):
            G_factor(0, s, 2, 2, part='middle')


class TestGamma:
    """Test gamma-vector extraction."""

    def test_extract(self):
        """gamma(x^2 + 4xy + y^2) = [1, 2]."""
        assert gamma_extract(X * X + X * Y * 4 + Y * Y) == [1, 2]

    def test_rebuild(self):
        """Rebuilding from the gamma-vector gives the polynomial back."""
        h = lhs_family('bivariate-eulerian', 5)
        gammas = gamma_extract(h)
        assert gamma_rebuild(gammas, 4) == h
        assert all(g.is_nonnegative() for g in gammas)

    def test_symbolic_coefficients(self):
        """Gamma coefficients may carry other variables."""
        h = (X + Y) * ALPHA
        assert gamma_extract(h) == [ALPHA]

    def test_not_symmetric(self):
        """Asymmetric or inhomogeneous input is rejected."""
        assert not is_symmetric(X * 2 + Y)
        with pytest.raises(KernelError):
            gamma_extract(X * 2 + Y)
        with pytest.raises(KernelError):
            gamma_extract(X * Y + X + Y)


class TestFamilies:
    """Test named enumeration families."""

    def test_eulerian(self):
        """A_3(x) renders as 1 + 4*x + x^2."""
        assert str(lhs_family('eulerian', 3)) == "1 + 4*x + x^2"

    def test_stirling_eulerian(self):
        """A_2(x,y|alpha,beta) = x alpha + y beta."""
        assert lhs_family('stirling-eulerian', 2) == X * ALPHA + Y * BETA

    def test_stirling_eulerian_at_ones(self):
        """alpha = beta = 1 recovers the bivariate Eulerian polynomial."""
        assert stirling_eulerian_at(4, 1, 1) == lhs_family('bivariate-eulerian', 4)

    def test_basic_family(self):
        """B_1 = u3 alpha."""
        assert lhs_family('b', 1) == MultiPoly.monomial({'u3': 1, 'alpha': 1})

    def test_secant_family(self):
        """At alpha = 1 the secant family counts alternating permutations."""
        counts = euler_numbers(6)
        for n in range(0, 7):
            poly = lhs_family('secant', n)
            assert poly.substitute('alpha', 1) == counts[n]

    def test_unknown_family(self):
        """Unknown names raise UnknownFamilyError."""
        with pytest.raises(UnknownFamilyError):
            get_family('nope')

    def test_family_start(self):
        """Families indexed from 1 refuse n = 0."""
        with pytest.raises(GuardError):
            lhs_family('stanley', 0)


class TestRegistry:
    """Test the verifier registry and residual accumulation."""

    def test_every_identity_registered(self):
        """Every identity id has a verifier."""
        assert SPEC_IDS <= set(identity_ids())
        assert {'psi-laws', 'structure'} <= set(identity_ids())
        assert identity_ids() == sorted(identity_ids())

    def test_unknown_identity(self):
        """Unknown ids raise UnknownIdentityError."""
        with pytest.raises(UnknownIdentityError):
            get_verifier('no-such')

    def test_shifted_identities(self):
        """Identities indexed by size n + 1 report t-degree n - 1."""
        assert get_verifier('carlitz').shift == 1
        assert get_verifier('main').shift == 1
        assert get_verifier('eulerian-egf').shift == 0

    def test_check_keeps_first_residual(self):
        """The first nonzero residual per label is kept."""
        check = Check('demo', 2, 2)
        check.compare('a', X, X)
        check.compare('b', X, Y, sample=0)
        check.compare('b', X, X * 2, sample=1)
        residuals = {r.label: r for r in check.residuals()}
        assert residuals['a'].is_zero
        assert residuals['b'].value == "x - y"
        assert residuals['b'].sample == 0
        assert not check.passed

    def test_check_require(self):
        """Boolean properties record their detail on failure."""
        check = Check('demo', 1, 1)
        check.require('ok', True)
        assert check.passed
        check.require('bad', False, detail="not positive")
        assert [r.value for r in check.residuals()] == ["0", "not positive"]


class TestReport:
    """Test VerificationReport serialization."""

    def make_report(self, passed=True):
        residual = DegreeResidual(label='egf', degree=3, value="0" if passed else "x")
        return VerificationReport(
            id='carlitz', n=4, passed=passed, residual_degree=3, seed=1,
            params={'mode': 'random'}, residuals=[residual],
        )

    def test_json_uses_pass_key(self):
        """The JSON form names the flag 'pass' and keeps field order."""
        text = self.make_report().to_json()
        assert text.startswith('{"id":"carlitz","params":{"mode":"random"},"n":4,"pass":true')

    def test_json_round_trip(self):
        """from_json reads what to_json writes."""
        report = self.make_report(passed=False)
        assert VerificationReport.from_json(report.to_json()) == report

    def test_failures_and_summary(self):
        """Only nonzero residuals are failures."""
        assert self.make_report().failures() == []
        failing = self.make_report(passed=False)
        assert [f.label for f in failing.failures()] == ['egf']
        assert failing.summary() == "FAIL carlitz n=4 t^3 seed=1"
