"""
Permutation statistics: the classical counts (inv, maj, des, ...) and the
peak/valley/double-ascent/double-descent quadruple under a boundary.
"""
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Dict, FrozenSet, Tuple

from .permutation import Permutation


class Sentinel(str, Enum):
    ZERO = '0'
    INFINITY = 'inf'

    def value_for(self, n: int) -> int:
        """Numeric stand-in: 0, or n + 1 for infinity."""
        return 0 if self is Sentinel.ZERO else n + 1


@dataclass(frozen=True)
class Boundary:
    """Sentinel values placed at positions 0 and n + 1."""

    left: Sentinel
    right: Sentinel

    def padded(self, p: Permutation) -> Tuple[int, ...]:
        n = len(p)
        return (
            (self.left.value_for(n),) + p.word + (self.right.value_for(n),)
        )

    def __str__(self) -> str:
        return f"({self.left.value},{self.right.value})"


Boundary.ZERO_ZERO = Boundary(Sentinel.ZERO, Sentinel.ZERO)
Boundary.INF_INF = Boundary(Sentinel.INFINITY, Sentinel.INFINITY)
Boundary.ZERO_INF = Boundary(Sentinel.ZERO, Sentinel.INFINITY)
Boundary.INF_ZERO = Boundary(Sentinel.INFINITY, Sentinel.ZERO)


@dataclass(frozen=True)
class StatProfile:
    n: int
    inv: int
    maj: int
    des: int
    asc: int
    exc: int
    cyc: int
    lma: int
    lmi: int
    rma: int
    rmi: int

    def as_dict(self) -> Dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class Quadruple:
    valleys: int
    peaks: int
    double_ascents: int
    double_descents: int

    def as_dict(self) -> Dict[str, int]:
        return {
            'valleys': self.valleys,
            'peaks': self.peaks,
            'da': self.double_ascents,
            'dd': self.double_descents,
        }


def _records(word, greater: bool) -> FrozenSet[int]:
    found = []
    best = None
    for v in word:
        if best is None or (v > best if greater else v < best):
            best = v
            found.append(v)
    return frozenset(found)


def _cycle_count(word: Tuple[int, ...]) -> int:
    seen = [False] * (len(word) + 1)
    cycles = 0
    for start in range(1, len(word) + 1):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = word[i - 1]
    return cycles


def classic_stats(p: Permutation) -> StatProfile:
    """All classical statistics of p."""
    w = p.word
    n = len(w)
    inv = 0
    for i in range(n):
        wi = w[i]
        for j in range(i + 1, n):
            if wi > w[j]:
                inv += 1
    des = maj = 0
    for i in range(n - 1):
        if w[i] > w[i + 1]:
            des += 1
            maj += i + 1
    asc = max(n - 1 - des, 0)
    exc = sum(1 for i, v in enumerate(w, start=1) if v > i)
    reverse = w[::-1]
    return StatProfile(
        n=n,
        inv=inv,
        maj=maj,
        des=des,
        asc=asc,
        exc=exc,
        cyc=_cycle_count(w),
        lma=len(_records(w, greater=True)),
        lmi=len(_records(w, greater=False)),
        rma=len(_records(reverse, greater=True)),
        rmi=len(_records(reverse, greater=False)),
    )


def quadruple_stats(p: Permutation, boundary: Boundary) -> Quadruple:
    """Classify every position of p as exactly one of V, M, da, dd."""
    s = boundary.padded(p)
    valleys = peaks = da = dd = 0
    for i in range(1, len(p) + 1):
        before = s[i - 1] < s[i]
        after = s[i] < s[i + 1]
        if before and not after:
            peaks += 1
        elif not before and after:
            valleys += 1
        elif before:
            da += 1
        else:
            dd += 1
    return Quadruple(
        valleys=valleys, peaks=peaks, double_ascents=da, double_descents=dd
    )


def is_alternating(p: Permutation) -> bool:
    """sigma_1 > sigma_2 < sigma_3 > ... from the first position."""
    w = p.word
    for i in range(len(w) - 1):
        if (w[i] > w[i + 1]) != (i % 2 == 0):
            return False
    return True


def lmi_letters(p: Permutation) -> FrozenSet[int]:
    """Left-to-right minima other than the letter 1."""
    return _records(p.word, greater=False) - {1}


def rmi_letters(p: Permutation) -> FrozenSet[int]:
    """Right-to-left minima other than the letter 1."""
    return _records(p.word[::-1], greater=False) - {1}


def lma_letters(p: Permutation) -> FrozenSet[int]:
    return _records(p.word, greater=True)
