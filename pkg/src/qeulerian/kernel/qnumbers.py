"""q-integers, q-factorials, q-binomials and the rising factorial."""
from functools import lru_cache
from itertools import combinations

from ..core.exceptions import KernelError
from .multipoly import MultiPoly


def _check_nonnegative(**values):
    for name, value in values.items():
        if not isinstance(value, int) or value < 0:
            raise KernelError(f"{name} must be a nonnegative integer, got {value}")


@lru_cache(maxsize=None)
def q_power(k: int) -> MultiPoly:
    """q^k for k >= 0."""
    _check_nonnegative(k=k)
    return MultiPoly.var('q', k)


@lru_cache(maxsize=None)
def qint(n: int) -> MultiPoly:
    """[n]_q = 1 + q + ... + q^(n-1); zero for n = 0."""
    _check_nonnegative(n=n)
    out = MultiPoly.zero()
    for i in range(n):
        out = out + q_power(i)
    return out


@lru_cache(maxsize=None)
def qfactorial(n: int) -> MultiPoly:
    """[n]_q! = [1]_q [2]_q ... [n]_q."""
    _check_nonnegative(n=n)
    if n == 0:
        return MultiPoly.one()
    return qfactorial(n - 1) * qint(n)


@lru_cache(maxsize=None)
def qbinomial(n: int, k: int) -> MultiPoly:
    """
    Gaussian binomial [n, k]_q as an exact polynomial quotient.

    Raises:
        KernelError: If k > n or an argument is negative
    """
    _check_nonnegative(n=n, k=k)
    if k > n:
        raise KernelError(f"q-binomial needs k <= n, got n={n}, k={k}")
    return qfactorial(n).exact_div(qfactorial(k) * qfactorial(n - k))


@lru_cache(maxsize=None)
def rising_factorial(n: int) -> MultiPoly:
    """(x)_n = x (x + 1) ... (x + n - 1)."""
    _check_nonnegative(n=n)
    x = MultiPoly.var('x')
    out = MultiPoly.one()
    for i in range(n):
        out = out * (x + i)
    return out


def ordered_partition_inversions(n: int, k: int) -> MultiPoly:
    """
    Sum of q^inv(A, B) over ordered partitions (A, B) of [n] with |A| = k,
    where inv(A, B) counts pairs a in A, b in B with a > b.
    """
    _check_nonnegative(n=n, k=k)
    if k > n:
        raise KernelError(f"Need k <= n, got n={n}, k={k}")
    counts = {}
    ground = range(1, n + 1)
    for block in combinations(ground, k):
        chosen = set(block)
        inv = sum(
            1 for a in chosen for b in ground if b not in chosen and a > b
        )
        counts[inv] = counts.get(inv, 0) + 1
    out = MultiPoly.zero()
    for inv, count in counts.items():
        out = out + q_power(inv) * count
    return out
