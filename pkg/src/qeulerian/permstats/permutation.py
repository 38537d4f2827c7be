"""Permutations of [n] and their guarded enumeration."""
import logging
import re
from itertools import permutations as _itertools_permutations
from typing import Iterator, Sequence, Tuple

from .. import config
from ..core.exceptions import GuardError, PermutationError

logger = logging.getLogger(__name__)

_SEPARATORS = re.compile(r'[\s,]+')


class Permutation:
    """A word on {1..n} using every letter once."""

    __slots__ = ('word',)

    def __init__(self, word: Sequence[int]):
        word = tuple(word)
        n = len(word)
        if sorted(word) != list(range(1, n + 1)):
            raise PermutationError(
                f"{list(word)} is not a permutation of 1..{n}"
            )
        self.word: Tuple[int, ...] = word

    @classmethod
    def _trusted(cls, word: Tuple[int, ...]) -> 'Permutation':
        obj = cls.__new__(cls)
        obj.word = word
        return obj

    @classmethod
    def identity(cls, n: int) -> 'Permutation':
        return cls(range(1, n + 1))

    @classmethod
    def parse(cls, text: str) -> 'Permutation':
        """
        Read '2164573', '5 10 2 12' or '5,10,2,12'.

        Compact digit words are only accepted for n <= 9.
        """
        text = text.strip()
        if not text:
            return cls(())
        if _SEPARATORS.search(text):
            parts = [p for p in _SEPARATORS.split(text) if p]
        else:
            parts = list(text)
        try:
            letters = [int(p) for p in parts]
        except ValueError:
            raise PermutationError(f"Malformed permutation word '{text}'") from None
        return cls(letters)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self):
        return iter(self.word)

    def __getitem__(self, i):
        return self.word[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.word == other.word

    def __lt__(self, other: 'Permutation') -> bool:
        return (len(self.word), self.word) < (len(other.word), other.word)

    def __hash__(self) -> int:
        return hash(self.word)

    def reverse(self) -> 'Permutation':
        return Permutation(self.word[::-1])

    def complement(self) -> 'Permutation':
        n = len(self.word)
        return Permutation(n + 1 - v for v in self.word)

    def position(self, letter: int) -> int:
        """0-based index of a letter."""
        return self.word.index(letter)

    def __str__(self) -> str:
        return format_word(self.word)

    def __repr__(self) -> str:
        return f"Permutation({self})"


def format_word(word: Sequence[int], compact: bool = None) -> str:
    """Digits run together when every letter is a single digit."""
    if compact is None:
        compact = all(v < 10 for v in word)
    return ("" if compact else " ").join(str(v) for v in word)


def check_size(n: int) -> None:
    """
    Enforce the enumeration guard.

    Raises:
        GuardError: If n is outside 0..ENUMERATION_MAX_N
    """
    limit = config.ENUMERATION_MAX_N
    if not isinstance(n, int) or n < 0 or n > limit:
        raise GuardError(
            f"Permutation size {n} is outside the guard range 0..{limit}"
        )


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    """All n! permutations of [n] in lexicographic order."""
    check_size(n)
    logger.debug(f"Enumerating S_{n}")
    for word in _itertools_permutations(range(1, n + 1)):
        yield Permutation._trusted(word)
