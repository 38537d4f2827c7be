"""
Substitution schemes (rational values for the alphabet with the side
conditions x + y = u3 + u4 and x y = u1 u2 built in) and truncation
policies, plus deterministic sampling of schemes.
"""
import logging
import random
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence

from pydantic import (
    BaseModel, ConfigDict, Field, field_validator, model_validator,
)

from .. import config
from ..core.exceptions import DegenerateSchemeError
from ..kernel import MultiPoly

logger = logging.getLogger(__name__)

FREE_VARIABLES = ('x', 'y', 'u3', 'u1', 'alpha', 'beta', 'q')


def _to_fraction(value):
    if value is None or isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(value).limit_denominator()
    return Fraction(value)


class SubstitutionScheme(BaseModel):
    """
    Free values for x, y, u3, u1 (and optionally alpha, beta, q); u4 and
    u2 are derived so the side conditions hold exactly.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    x: Fraction
    y: Fraction
    u3: Fraction = Fraction(0)
    u1: Fraction = Fraction(1)
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    q: Optional[Fraction] = None

    @field_validator('*', mode='before')
    @classmethod
    def coerce_fraction(cls, v):
        try:
            return _to_fraction(v)
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not a rational value: {v!r}") from e

    @model_validator(mode='after')
    def check_side_conditions(self) -> 'SubstitutionScheme':
        if self.x == self.y:
            raise DegenerateSchemeError(f"Scheme needs x != y, got x = y = {self.x}")
        if self.u1 == 0:
            raise DegenerateSchemeError("Scheme needs u1 != 0")
        return self

    @property
    def u4(self) -> Fraction:
        return self.x + self.y - self.u3

    @property
    def u2(self) -> Fraction:
        return self.x * self.y / self.u1

    def values(self, symbolic: Sequence[str] = ()) -> Dict[str, Fraction]:
        """
        Substitution map for every specified variable.

        Args:
            symbolic: Variables to leave out even when they have a value
        """
        out = {
            'x': self.x, 'y': self.y, 'u1': self.u1, 'u2': self.u2,
            'u3': self.u3, 'u4': self.u4,
        }
        for name in ('alpha', 'beta', 'q'):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        for name in symbolic:
            out.pop(name, None)
        return out

    def specialize(self, poly: MultiPoly, symbolic: Sequence[str] = ()) -> MultiPoly:
        return poly.substitute_many(self.values(symbolic))

    def as_params(self) -> Dict[str, str]:
        return {name: str(value) for name, value in self.values().items()}

    def __str__(self) -> str:
        return ", ".join(f"{k}={v}" for k, v in self.values().items())


class TruncationPolicy(BaseModel):
    """How far series are expanded and how identities are sampled."""

    model_config = ConfigDict(frozen=True)

    t_order: int = Field(ge=1, description="Truncation order N in t")
    q_window: int = Field(ge=1, description="Product factors / exact q-window K")
    sample_count: Optional[int] = Field(
        default=None, ge=1,
        description="Random schemes per check; None uses the identity default"
    )
    seed: int = Field(default=20240501)
    exhaustive_grid: bool = Field(default=False)

    @classmethod
    def default(cls, n_max: Optional[int] = None, **overrides) -> 'TruncationPolicy':
        """N = n_max, K = n_max (n_max - 1) / 2 + 1."""
        n_max = n_max or config.DEFAULT_N_MAX
        values = {
            't_order': n_max,
            'q_window': n_max * (n_max - 1) // 2 + 1,
            'seed': config.DEFAULT_SEED,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


def scheme_rng(seed: int, identity: str, n: int) -> random.Random:
    """Independent, reproducible stream per (seed, identity, n)."""
    return random.Random(f"{seed}:{identity}:{n}")


def random_rational(rng: random.Random, bound: int = 12, den: int = 5) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, den))


def random_scheme(
    rng: random.Random,
    with_alpha: bool = False,
    with_beta: bool = False,
    avoid_x: Sequence[Fraction] = ()
) -> SubstitutionScheme:
    """Draw a non-degenerate scheme; rejected draws are redrawn."""
    while True:
        x = random_rational(rng)
        y = random_rational(rng)
        u3 = random_rational(rng)
        u1 = random_rational(rng)
        alpha = random_rational(rng) if with_alpha else None
        beta = random_rational(rng) if with_beta else None
        if x == y or u1 == 0 or x in avoid_x:
            continue
        return SubstitutionScheme(
            x=x, y=y, u3=u3, u1=u1, alpha=alpha, beta=beta
        )


_GRID_OFFSETS = {
    'x': (Fraction(1), Fraction(1)),
    'y': (Fraction(-1), Fraction(-1)),
    'u3': (Fraction(1, 2), Fraction(1)),
    'u1': (Fraction(1, 3), Fraction(1)),
    'alpha': (Fraction(1, 5), Fraction(1)),
    'beta': (Fraction(-1, 7), Fraction(-1)),
}


def grid_values(variable: str, size: int) -> List[Fraction]:
    """size distinct values; x and y draw from disjoint sets, u1 avoids 0."""
    start, step = _GRID_OFFSETS[variable]
    return [start + step * i for i in range(size)]


def grid_schemes(
    size: int,
    variables: Sequence[str],
    avoid_x: Sequence[Fraction] = ()
) -> Iterator[SubstitutionScheme]:
    """Every scheme on a (size)^k grid over the given free variables."""
    base = {'x': Fraction(2), 'y': Fraction(-3), 'u3': Fraction(1, 2), 'u1': Fraction(1)}
    axes = [grid_values(v, size + len(avoid_x)) for v in variables]
    for point in product(*axes):
        values = dict(base)
        values.update(zip(variables, point))
        if values['x'] in avoid_x:
            continue
        yield SubstitutionScheme(**values)


def sample_schemes(
    identity: str,
    n: int,
    policy: TruncationPolicy,
    default_count: int,
    variables: Sequence[str] = ('x', 'y', 'u3', 'u1'),
    avoid_x: Sequence[Fraction] = ()
) -> List[SubstitutionScheme]:
    """
    Schemes for one (identity, n) check: the exhaustive grid when
    requested and small enough, otherwise seeded random draws.
    """
    if policy.exhaustive_grid:
        if n <= config.EXHAUSTIVE_GRID_MAX_N:
            return list(grid_schemes(n + 2, variables, avoid_x))
        logger.warning(
            f"{identity}: exhaustive grid is limited to n <= "
            f"{config.EXHAUSTIVE_GRID_MAX_N}; sampling randomly at n={n}"
        )
    count = policy.sample_count or default_count
    rng = scheme_rng(policy.seed, identity, n)
    return [
        random_scheme(
            rng,
            with_alpha='alpha' in variables,
            with_beta='beta' in variables,
            avoid_x=avoid_x,
        )
        for _ in range(count)
    ]
