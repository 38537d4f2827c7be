"""
The involutions psi_x on permutations and Psi_x on marked permutations.

psi_x moves the block that x heads across the letter 1: a left block
starting with x is reversed into the right part, a right block ending with
x is reversed into the left part. The destination gap is the one keeping
left-block minima decreasing and right-block minima increasing.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, List, Sequence

from ..core.exceptions import DecompositionError
from ..permstats import Permutation, lmi_letters, rmi_letters
from .blocks import BiBasicDecomposition, bi_basic_decomposition

logger = logging.getLogger(__name__)


def _insertion_gap(minima: Sequence[int], x: int, increasing: bool) -> int:
    """
    Gap index keeping the block minima monotone after inserting x.

    Raises:
        DecompositionError: Unless exactly one gap qualifies
    """
    gaps = []
    for g in range(len(minima) + 1):
        before, after = minima[:g], minima[g:]
        if increasing:
            fits = all(m < x for m in before) and all(m > x for m in after)
        else:
            fits = all(m > x for m in before) and all(m < x for m in after)
        if fits:
            gaps.append(g)
    if len(gaps) != 1:
        raise DecompositionError(
            f"Expected one insertion gap for {x} among minima "
            f"{list(minima)}, found {len(gaps)}"
        )
    return gaps[0]


def _check_letter(p: Permutation, x: int):
    if not 1 <= x <= len(p):
        raise DecompositionError(f"Letter {x} is outside 1..{len(p)}")


def psi_x(p: Permutation, x: int) -> Permutation:
    """
    Apply psi_x; the identity unless x heads a bi-basic block.

    Raises:
        DecompositionError: If x is out of range, or the moved letter does
            not end up as a minimum of the opposite kind
    """
    _check_letter(p, x)
    if x == 1:
        return p
    d = bi_basic_decomposition(p)
    left = list(d.left_blocks)
    right = list(d.right_blocks)
    left_heads = d.left_minima
    right_tails = d.right_minima
    if x in left_heads:
        block = left.pop(left_heads.index(x))
        gap = _insertion_gap(right_tails, x, increasing=True)
        right.insert(gap, block[::-1])
        result = BiBasicDecomposition(tuple(left), tuple(right)).concat()
        if x not in rmi_letters(result):
            raise DecompositionError(
                f"psi_{x}({p}) = {result} does not make {x} a "
                f"right-to-left minimum"
            )
        return result
    if x in right_tails:
        block = right.pop(right_tails.index(x))
        gap = _insertion_gap(left_heads, x, increasing=False)
        left.insert(gap, block[::-1])
        result = BiBasicDecomposition(tuple(left), tuple(right)).concat()
        if x not in lmi_letters(result):
            raise DecompositionError(
                f"psi_{x}({p}) = {result} does not make {x} a "
                f"left-to-right minimum"
            )
        return result
    return p


def psi_action(p: Permutation, letters: Iterable[int]) -> Permutation:
    """psi_X as the composition of psi_x over X."""
    for x in sorted(set(letters)):
        p = psi_x(p, x)
    return p


def orbit_canonicalize(p: Permutation) -> Permutation:
    """The orbit representative whose first letter is 1."""
    if len(p) == 0:
        return p
    return psi_action(p, lmi_letters(p))


def orbit(p: Permutation) -> List[Permutation]:
    """All psi_X(p) for X inside the minima other than 1, sorted."""
    ground = sorted(lmi_letters(p) | rmi_letters(p))
    seen = set()
    for r in range(len(ground) + 1):
        for chosen in combinations(ground, r):
            seen.add(psi_action(p, chosen))
    return sorted(seen)


@dataclass(frozen=True)
class MarkedPermutation:
    """A permutation with marks on some of its minima other than 1."""

    permutation: Permutation
    marks: FrozenSet[int] = frozenset()

    def __post_init__(self):
        marks = frozenset(self.marks)
        object.__setattr__(self, 'marks', marks)
        allowed = lmi_letters(self.permutation) | rmi_letters(self.permutation)
        stray = marks - allowed
        if stray:
            raise DecompositionError(
                f"Marks {sorted(stray)} are not minima of {self.permutation}"
            )

    def __str__(self) -> str:
        marks = ",".join(str(v) for v in sorted(self.marks))
        return f"({self.permutation}, {{{marks}}})"


def marked_action(m: MarkedPermutation, x: int) -> MarkedPermutation:
    """Psi_x: (psi_x(p), S xor {x}) when x is a minimum other than 1."""
    p = m.permutation
    if x not in lmi_letters(p) | rmi_letters(p):
        return m
    return MarkedPermutation(psi_x(p, x), m.marks ^ {x})


def canonical_marked(m: MarkedPermutation) -> MarkedPermutation:
    """Psi_S(p, S); the result carries no marks."""
    for x in sorted(m.marks):
        m = marked_action(m, x)
    return m
