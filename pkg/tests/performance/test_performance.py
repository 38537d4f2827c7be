"""
Performance tests for qeulerian.
Tests that enumeration and the heavier verifiers stay within time ceilings.
"""
import pytest
import time
import sys
from pathlib import Path

# Add src to path
project_root = Path(__file__).parent.parent.parent
src_path = project_root / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from qeulerian.core.cache import reset_cache_service
from qeulerian.identities import TruncationPolicy, lhs_family, verify_identity
from qeulerian.permstats import StatWeight, distribution


@pytest.fixture(autouse=True)
def cold_cache():
    reset_cache_service()
    yield


@pytest.mark.performance
class TestPerformance:
    """Test running times of the expensive paths."""

    def test_enumeration_speed(self):
        """Distributing des over S_8 stays fast."""
        start = time.time()
        poly = distribution(8, [StatWeight('des', 'x')])
        elapsed = time.time() - start

        assert poly.evaluate({'x': 1}) == 40320
        assert elapsed < 5.0

    def test_family_cache_speed(self):
        """A cached family is returned without re-enumerating."""
        lhs_family('ji', 7)
        start = time.time()
        lhs_family('ji', 7)
        elapsed = time.time() - start

        assert elapsed < 0.01

    def test_carlitz_speed(self):
        """carlitz at n = 6 with the default sample count."""
        start = time.time()
        report = verify_identity('carlitz', 6, TruncationPolicy.default(6))
        elapsed = time.time() - start

        assert report.passed
        assert elapsed < 20.0

    @pytest.mark.slow
    def test_main_speed(self):
        """The product identity at n = 4 with a handful of schemes."""
        start = time.time()
        report = verify_identity('main', 4, TruncationPolicy.default(4, sample_count=3))
        elapsed = time.time() - start

        assert report.passed
        assert elapsed < 120.0
