"""
Unit tests for permutations, statistics and their distributions.
"""
import pytest
import sys
from pathlib import Path

from hypothesis import given, settings, strategies as st

# Add src to path
project_root = Path(__file__).parent.parent.parent
src_path = project_root / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))

from qeulerian.core.exceptions import (
    AlphabetError, GuardError, PermutationError, StatisticError,
)
from qeulerian.kernel import MultiPoly, qfactorial, rising_factorial
from qeulerian.permstats import (
    Boundary, Permutation, StatWeight, check_size, classic_stats,
    distribution, enumerate_permutations, is_alternating, is_basic,
    lmi_letters, quadruple_stats, rmi_letters,
)

X = MultiPoly.var('x')


@st.composite
def permutations(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    return Permutation(draw(st.permutations(range(1, n + 1))))


class TestPermutation:
    """Test Permutation parsing and enumeration."""

    def test_parse_compact(self):
        """Single-digit words may run together."""
        assert Permutation.parse("2164573").word == (2, 1, 6, 4, 5, 7, 3)

    def test_parse_separated(self):
        """Spaces or commas separate multi-digit letters."""
        p = Permutation.parse("3, 1, 2")
        assert p.word == (3, 1, 2)
        word = "5 10 2 12 4 13 6 1 11 3 9 8 15 7 14"
        assert str(Permutation.parse(word)) == word

    @pytest.mark.parametrize("text", ["5 10 2 12", "112", "1 a 2"])
    def test_parse_rejects_non_permutations(self, text):
        """Words that are not permutations of 1..n are rejected."""
        with pytest.raises(PermutationError):
            Permutation.parse(text)

    def test_enumeration_order_and_count(self):
        """S_3 is listed lexicographically."""
        words = [p.word for p in enumerate_permutations(3)]
        assert words[0] == (1, 2, 3)
        assert words[-1] == (3, 2, 1)
        assert len(words) == 6
        assert len(list(enumerate_permutations(0))) == 1

    def test_guard(self):
        """Sizes outside the guard range are refused."""
        with pytest.raises(GuardError):
            check_size(11)
        with pytest.raises(GuardError):
            list(enumerate_permutations(-1))

    def test_reverse_and_complement(self):
        """reverse and complement of 132."""
        p = Permutation([1, 3, 2])
        assert p.reverse().word == (2, 3, 1)
        assert p.complement().word == (3, 1, 2)


class TestStatistics:
    """Test classical statistics and the boundary quadruples."""

    def test_classic_321(self):
        """inv(321) = maj(321) = 3."""
        stats = classic_stats(Permutation([3, 2, 1]))
        assert stats.inv == 3
        assert stats.maj == 3
        assert stats.des == 2
        assert stats.asc == 0
        assert stats.exc == 1
        assert stats.cyc == 2
        assert (stats.lma, stats.lmi, stats.rma, stats.rmi) == (1, 3, 3, 1)

    def test_identity_minima(self):
        """The identity has lmi = 1 and rmi = n."""
        stats = classic_stats(Permutation.identity(4))
        assert stats.lmi == 1
        assert stats.rmi == 4
        assert lmi_letters(Permutation.identity(4)) == frozenset()
        assert rmi_letters(Permutation.identity(4)) == frozenset({2, 3, 4})

    def test_quadruple_zero_zero(self):
        """213 under (0,0) has one valley and two peaks."""
        q = quadruple_stats(Permutation([2, 1, 3]), Boundary.ZERO_ZERO)
        assert q.as_dict() == {'valleys': 1, 'peaks': 2, 'da': 0, 'dd': 0}

    def test_quadruple_inf_inf(self):
        """213 under (inf,inf) has one valley, one double ascent and one double descent."""
        q = quadruple_stats(Permutation([2, 1, 3]), Boundary.INF_INF)
        assert q.as_dict() == {'valleys': 1, 'peaks': 0, 'da': 1, 'dd': 1}

    def test_alternating(self):
        """3142 is alternating; S_4 holds five such permutations."""
        assert is_alternating(Permutation([3, 1, 4, 2]))
        assert not is_alternating(Permutation([1, 3, 2, 4]))
        assert sum(1 for p in enumerate_permutations(4) if is_alternating(p)) == 5

    def test_basic(self):
        """Basic permutations begin with n."""
        assert is_basic(Permutation([3, 1, 2]))
        assert not is_basic(Permutation([1, 3, 2]))
        assert not is_basic(Permutation(()))

    @given(permutations())
    @settings(max_examples=80, deadline=None)
    def test_quadruple_partitions_positions(self, p):
        """Every position is exactly one of valley, peak, da, dd."""
        for boundary in (
            Boundary.ZERO_ZERO, Boundary.ZERO_INF,
            Boundary.INF_ZERO, Boundary.INF_INF,
        ):
            assert sum(quadruple_stats(p, boundary).as_dict().values()) == len(p)

    @given(permutations())
    @settings(max_examples=80, deadline=None)
    def test_peak_valley_balance(self, p):
        """Peaks and valleys alternate between the sentinels."""
        zz = quadruple_stats(p, Boundary.ZERO_ZERO)
        ii = quadruple_stats(p, Boundary.INF_INF)
        zi = quadruple_stats(p, Boundary.ZERO_INF)
        assert zz.peaks == zz.valleys + 1
        assert ii.valleys == ii.peaks + 1
        assert zi.peaks == zi.valleys

    @given(permutations())
    @settings(max_examples=80, deadline=None)
    def test_reverse_swaps_records(self, p):
        """Reversal exchanges left-to-right and right-to-left records."""
        a = classic_stats(p)
        b = classic_stats(p.reverse())
        assert (a.lma, a.lmi) == (b.rma, b.rmi)
        assert a.inv + b.inv == len(p) * (len(p) - 1) // 2


class TestDistribution:
    """Test weighted distributions over S_n."""

    def test_eulerian_3(self):
        """sum x^des over S_3 is 1 + 4x + x^2."""
        assert str(distribution(3, [StatWeight('des', 'x')])) == "1 + 4*x + x^2"

    @pytest.mark.parametrize("n", range(0, 6))
    def test_mahonian(self, n):
        """inv is distributed as [n]_q!."""
        assert distribution(n, [StatWeight('inv', 'q')]) == qfactorial(n)

    @pytest.mark.parametrize("n", range(0, 6))
    def test_stirling(self, n):
        """lma is distributed by the rising factorial."""
        assert distribution(n, [StatWeight('lma', 'x')]) == rising_factorial(n)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_inv_and_maj_equidistributed(self, n):
        """inv and maj share the Mahonian distribution."""
        assert distribution(n, [StatWeight('maj', 'q')]) == distribution(
            n, [StatWeight('inv', 'q')]
        )

    def test_offsets(self):
        """Offsets shift exponents; weights on one variable add."""
        poly = distribution(2, [StatWeight('lma', 'x', 1), StatWeight('des', 'x')])
        assert poly == X * 2

    def test_basic_only(self):
        """basic_only keeps the (n - 1)! permutations starting with n."""
        poly = distribution(4, [], basic_only=True)
        assert poly == MultiPoly.constant(6)

    def test_unknown_statistic(self):
        """Unknown statistics and variables are rejected."""
        with pytest.raises(StatisticError):
            StatWeight('height', 'x')
        with pytest.raises(AlphabetError):
            StatWeight('des', 'z')

    def test_quadruple_needs_boundary(self):
        """Quadruple statistics require sentinels."""
        with pytest.raises(StatisticError):
            distribution(3, [StatWeight('peaks', 'u2')])

    def test_negative_exponent(self):
        """An offset larger than the statistic is an error."""
        with pytest.raises(StatisticError):
            distribution(3, [StatWeight('des', 'x', 1)])

    def test_weight_rendering(self):
        """Weights describe themselves compactly."""
        assert str(StatWeight('lma', 'alpha', 1)) == "lma-1->alpha"
        assert str(StatWeight('des', 'x', -1)) == "des+1->x"
