"""
Integration tests for the identity verifiers.
Runs every registered identity on small sizes and checks the reports.
"""
import pytest
import sys
from pathlib import Path
from unittest.mock import patch

# Add src to path
project_root = Path(__file__).parent.parent.parent
src_path = project_root / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from qeulerian.core.exceptions import (
    ConfigurationError, GuardError, UnknownIdentityError,
)
from qeulerian.identities import (
    TruncationPolicy, get_verifier, identity_ids, verify_identity,
)
from qeulerian.kernel import MultiPoly

SMALL_SIZES = (1, 2, 3)


def small_policy(n: int, **overrides) -> TruncationPolicy:
    values = {'sample_count': 3, 'seed': 11}
    values.update(overrides)
    return TruncationPolicy.default(max(n, 1), **values)


def sizes_for(identity: str, sizes):
    first = get_verifier(identity).min_n
    return [n for n in sizes if n >= first]


CASES = [(i, n) for i in identity_ids() for n in sizes_for(i, SMALL_SIZES)]
SLOW_CASES = [(i, 4) for i in identity_ids()]


class TestVerifySuite:
    """Every identity holds at small sizes."""

    @pytest.mark.parametrize("identity,n", CASES)
    def test_identity_holds(self, identity, n):
        """The report passes and every residual is zero."""
        report = verify_identity(identity, n, small_policy(n))
        assert report.passed, [r for r in report.failures()]
        assert report.residuals
        assert report.id == identity
        assert report.n == n
        assert report.residual_degree == n - get_verifier(identity).shift
        assert report.seed == 11

    @pytest.mark.slow
    @pytest.mark.parametrize("identity,n", SLOW_CASES)
    def test_identity_holds_at_four(self, identity, n):
        """The same checks one size up."""
        report = verify_identity(identity, n, small_policy(n, sample_count=2))
        assert report.passed, [r for r in report.failures()]

    @pytest.mark.parametrize("identity", ['eulerian-egf', 'stanley', 'ln-formula', 'rn-formula', 'secant', 'structure'])
    def test_empty_size(self, identity):
        """Identities that start at n = 0 accept it."""
        report = verify_identity(identity, 0, small_policy(1))
        assert report.passed

    def test_main_labels(self):
        """The product check reports its building blocks and direct products."""
        report = verify_identity('main', 3, small_policy(3))
        labels = {r.label for r in report.residuals}
        assert 'direct-left' in labels
        assert 'direct-right' in labels
        assert any(label.startswith('convolution/') for label in labels)
        assert 'right_conclusive' in report.params

    def test_main2_q_one_label(self):
        """The integral form is also compared with the ji form at q = 1."""
        report = verify_identity('main2', 3, small_policy(3))
        labels = {r.label for r in report.residuals}
        assert {'integral-form', 'q-one', 'endpoint-ji'} <= labels
        assert report.passed

    def test_pk_lr_orbit_labels(self):
        """Small sizes include the marked-orbit sweep."""
        report = verify_identity('pk-lr', 4, small_policy(4))
        labels = {r.label for r in report.residuals}
        assert 'orbit-cover' in labels
        assert report.passed


class TestVerifyBehaviour:
    """Test guards, determinism and failure reporting."""

    def test_reports_are_deterministic(self):
        """Identical inputs give byte-identical JSON."""
        first = verify_identity('carlitz', 3, small_policy(3)).to_json()
        second = verify_identity('carlitz', 3, small_policy(3)).to_json()
        assert first == second

    def test_timings_only_on_request(self):
        """elapsed_ms is recorded only when asked for."""
        assert verify_identity('carlitz', 2, small_policy(2)).elapsed_ms is None
        timed = verify_identity('carlitz', 2, small_policy(2), timings=True)
        assert timed.elapsed_ms is not None

    def test_sampling_params_recorded(self):
        """Reports describe how schemes were drawn."""
        report = verify_identity('carlitz', 3, small_policy(3))
        assert report.params['mode'] == 'random'
        assert report.params['samples'] == '3'
        assert report.params['degree_bound'] == '3'

    def test_grid_mode(self):
        """Grid mode is used for small n when requested."""
        report = verify_identity('carlitz2', 2, small_policy(2, exhaustive_grid=True))
        assert report.params['mode'] == 'grid'
        assert report.passed

    def test_default_policy(self):
        """Without a policy the defaults cover n."""
        assert verify_identity('eulerian-egf', 3).passed

    def test_t_order_too_small(self):
        """A series check beyond the policy's t-order is a configuration error."""
        with pytest.raises(ConfigurationError):
            verify_identity('eulerian-egf', 4, TruncationPolicy(t_order=2, q_window=2))

    def test_below_first_size(self):
        """Sizes below an identity's start are refused."""
        with pytest.raises(GuardError):
            verify_identity('carlitz', 0, small_policy(1))

    def test_unknown_identity(self):
        """Unknown ids are refused."""
        with pytest.raises(UnknownIdentityError):
            verify_identity('no-such', 2)

    def test_failure_is_reported(self):
        """A wrong left-hand side yields a failing report with its residual."""
        wrong = MultiPoly.var('x') * 7
        with patch('qeulerian.identities.series_checks.lhs_family', return_value=wrong):
            report = verify_identity('eulerian-egf', 2, small_policy(2))
        assert not report.passed
        failure = report.failures()[0]
        assert failure.label == 'egf'
        assert failure.value != "0"
