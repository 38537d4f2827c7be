"""
Standardization and the two block decompositions of a permutation:
basic (cut before every left-to-right maximum) and bi-basic (left-to-right
minima before the letter 1, right-to-left minima after it).
"""
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..core.exceptions import DecompositionError
from ..permstats import Permutation

Block = Tuple[int, ...]


def red(word: Sequence[int]) -> Permutation:
    """
    Replace the i-th smallest letter by i.

    Raises:
        DecompositionError: If letters repeat
    """
    word = tuple(word)
    if len(set(word)) != len(word):
        raise DecompositionError(f"Cannot standardize {list(word)}: repeated letters")
    rank = {v: i for i, v in enumerate(sorted(word), start=1)}
    return Permutation._trusted(tuple(rank[v] for v in word))


def format_blocks(blocks: Sequence[Sequence[int]], compact: bool = None) -> str:
    """Bar notation, e.g. '21 | 645 | 73' or '5 10 | 2 12 4 13 6'."""
    if compact is None:
        compact = all(v < 10 for block in blocks for v in block)
    sep = "" if compact else " "
    return " | ".join(sep.join(str(v) for v in block) for block in blocks)


@dataclass(frozen=True)
class BasicDecomposition:
    blocks: Tuple[Block, ...]

    def concat(self) -> Permutation:
        return Permutation(v for block in self.blocks for v in block)

    def format(self) -> str:
        return format_blocks(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class BiBasicDecomposition:
    """
    alpha_1 ... alpha_k 1 beta_1 ... beta_l, where each alpha starts with
    its minimum and each beta ends with its minimum.
    """

    left_blocks: Tuple[Block, ...]
    right_blocks: Tuple[Block, ...]
    pivot: int = 1

    @property
    def left_minima(self) -> List[int]:
        return [block[0] for block in self.left_blocks]

    @property
    def right_minima(self) -> List[int]:
        return [block[-1] for block in self.right_blocks]

    def blocks(self) -> Tuple[Block, ...]:
        return self.left_blocks + ((self.pivot,),) + self.right_blocks

    def concat(self) -> Permutation:
        return Permutation(v for block in self.blocks() for v in block)

    def format(self) -> str:
        return format_blocks(self.blocks())


def basic_decomposition(p: Permutation) -> BasicDecomposition:
    blocks: List[List[int]] = []
    best = 0
    for v in p:
        if v > best:
            best = v
            blocks.append([v])
        else:
            blocks[-1].append(v)
    return BasicDecomposition(tuple(tuple(b) for b in blocks))


def _cut_before_minima(word: Sequence[int]) -> List[Block]:
    blocks: List[List[int]] = []
    best = None
    for v in word:
        if best is None or v < best:
            best = v
            blocks.append([v])
        else:
            blocks[-1].append(v)
    return [tuple(b) for b in blocks]


def bi_basic_decomposition(p: Permutation) -> BiBasicDecomposition:
    """
    Raises:
        DecompositionError: On the empty permutation
    """
    if len(p) == 0:
        raise DecompositionError("The empty permutation has no letter 1")
    k = p.position(1)
    left = _cut_before_minima(p.word[:k])
    # cutting after right-to-left minima is cutting the mirror image
    # before its left-to-right minima
    mirrored = _cut_before_minima(p.word[k + 1:][::-1])
    right = [block[::-1] for block in reversed(mirrored)]
    return BiBasicDecomposition(tuple(left), tuple(right))
