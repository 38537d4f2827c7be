"""Fixed variable alphabet shared by every polynomial."""
from typing import Dict, Tuple

from ..core.exceptions import AlphabetError

VARIABLES: Tuple[str, ...] = (
    'x', 'y', 'u1', 'u2', 'u3', 'u4', 'alpha', 'beta', 'q'
)
ARITY = len(VARIABLES)

_INDEX: Dict[str, int] = {name: i for i, name in enumerate(VARIABLES)}

Q_INDEX = _INDEX['q']


def var_index(name: str) -> int:
    """Position of a variable in exponent vectors."""
    try:
        return _INDEX[name]
    except KeyError:
        raise AlphabetError(
            f"Variable '{name}' is not in the alphabet {VARIABLES}"
        ) from None
