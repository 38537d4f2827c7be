"""
Identity verification engine: a registry of checks keyed by identity id,
a residual accumulator, and verify_identity which runs one (id, n) check
and returns a VerificationReport.
"""
import logging
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence

from .. import config
from ..core.exceptions import ConfigurationError, GuardError, UnknownIdentityError
from .report import DegreeResidual, VerificationReport
from .schemes import SubstitutionScheme, TruncationPolicy, sample_schemes

logger = logging.getLogger(__name__)


def _is_zero(value) -> bool:
    is_zero = getattr(value, 'is_zero', None)
    if callable(is_zero):
        return is_zero()
    return not value


class Check:
    """
    Residual accumulator for one report. Keeps the first nonzero residual
    per label, or '0' when every comparison under the label vanished.
    """

    def __init__(self, identity: str, n: int, degree: int):
        self.identity = identity
        self.n = n
        self.degree = degree
        self.params: Dict[str, str] = {}
        self._residuals: Dict[str, DegreeResidual] = {}
        self.comparisons = 0

    def _record(self, label: str, value: Optional[str], sample: Optional[int], degree: Optional[int]):
        self.comparisons += 1
        current = self._residuals.get(label)
        if value is None:
            if current is None:
                self._residuals[label] = DegreeResidual(
                    label=label, degree=self.degree if degree is None else degree
                )
            return
        if current is None or current.is_zero:
            self._residuals[label] = DegreeResidual(
                label=label,
                degree=self.degree if degree is None else degree,
                value=value,
                sample=sample,
            )
            logger.debug(f"{self.identity} n={self.n} {label}: residual {value}")

    def compare(self, label: str, lhs, rhs, sample: Optional[int] = None, degree: Optional[int] = None) -> bool:
        """Record lhs - rhs; True when it vanishes."""
        diff = lhs - rhs
        if _is_zero(diff):
            self._record(label, None, sample, degree)
            return True
        self._record(label, str(diff), sample, degree)
        return False

    def require(self, label: str, condition: bool, detail: str = "violated", sample: Optional[int] = None) -> bool:
        """Record a boolean property; detail becomes the residual text."""
        self._record(label, None if condition else detail, sample, None)
        return condition

    def compare_series(self, label: str, lhs, rhs, sample: Optional[int] = None):
        """Coefficientwise comparison of two t-series."""
        for m in range(min(lhs.order, rhs.order) + 1):
            if not self.compare(label, lhs[m], rhs[m], sample, degree=m):
                return

    def schemes(
        self,
        policy: TruncationPolicy,
        default_count: Optional[int],
        variables: Sequence[str] = ('x', 'y', 'u3', 'u1'),
        avoid_x=(),
        n: Optional[int] = None,
    ) -> List[SubstitutionScheme]:
        """Draw the substitution schemes and note how they were drawn."""
        n = self.n if n is None else n
        grid = policy.exhaustive_grid and n <= config.EXHAUSTIVE_GRID_MAX_N
        drawn = sample_schemes(
            self.identity, n, policy,
            default_count or config.DEFAULT_SAMPLES,
            variables=variables, avoid_x=avoid_x,
        )
        self.params['mode'] = 'grid' if grid else 'random'
        self.params['samples'] = str(len(drawn))
        self.params['variables'] = ",".join(variables)
        self.params['degree_bound'] = str(n)
        return drawn

    @property
    def passed(self) -> bool:
        return all(r.is_zero for r in self._residuals.values())

    def residuals(self) -> List[DegreeResidual]:
        return list(self._residuals.values())


@dataclass(frozen=True)
class Verifier:
    id: str
    run: Callable[[Check, int, TruncationPolicy], None]
    description: str
    samples: Optional[int] = None
    # reports for identities indexed by size n + 1 check t-degree n - 1
    shift: int = 0
    min_n: int = 1
    uses_series: bool = True


_REGISTRY: Dict[str, Verifier] = {}


def verifier(
    identity: str,
    description: str,
    samples: Optional[int] = None,
    shift: int = 0,
    min_n: int = 1,
    uses_series: bool = True,
):
    """Register a check function under an identity id."""
    def decorator(func):
        _REGISTRY[identity] = Verifier(
            id=identity,
            run=func,
            description=description,
            samples=samples,
            shift=shift,
            min_n=min_n,
            uses_series=uses_series,
        )
        return func

    return decorator


def identity_ids() -> List[str]:
    return sorted(_REGISTRY)


def get_verifier(identity: str) -> Verifier:
    """
    Raises:
        UnknownIdentityError: If the id is not registered
    """
    found = _REGISTRY.get(identity)
    if found is None:
        raise UnknownIdentityError(
            f"Unknown identity '{identity}'; known: {', '.join(identity_ids())}"
        )
    return found


def default_samples(identity: str) -> int:
    return get_verifier(identity).samples or config.DEFAULT_SAMPLES


def verify_identity(
    identity: str,
    n: int,
    policy: Optional[TruncationPolicy] = None,
    timings: bool = False
) -> VerificationReport:
    """
    Run one identity check at permutation size n.

    Args:
        identity: Registered identity id
        n: Permutation size
        policy: Truncation and sampling policy; defaults cover n
        timings: Record elapsed_ms in the report

    Returns:
        VerificationReport with pass set iff every residual vanished

    Raises:
        UnknownIdentityError: On an unknown id
        GuardError: If n is below the identity's first size
        ConfigurationError: If the check needs more t-order than the policy allows
    """
    v = get_verifier(identity)
    if policy is None:
        policy = TruncationPolicy.default(max(n, config.DEFAULT_N_MAX))
    if n < v.min_n:
        raise GuardError(f"{identity} starts at n = {v.min_n}, got {n}")
    degree = n - v.shift
    if v.uses_series and degree > policy.t_order:
        raise ConfigurationError(
            f"{identity} at n={n} needs t-order {degree}, policy allows "
            f"{policy.t_order}"
        )

    check = Check(identity, n, degree)
    logger.info(f"Verifying {identity} at n={n}")
    start = time.perf_counter()
    v.run(check, n, policy)
    elapsed_ms = (time.perf_counter() - start) * 1000

    report = VerificationReport(
        id=identity,
        params=dict(sorted(check.params.items())),
        n=n,
        passed=check.passed,
        residual_degree=degree,
        elapsed_ms=round(elapsed_ms, 3) if timings else None,
        seed=policy.seed,
        residuals=check.residuals(),
    )
    if report.passed:
        logger.info(
            f"{identity} n={n} passed ({check.comparisons} comparisons, "
            f"{elapsed_ms:.1f} ms)"
        )
    else:
        failed = ", ".join(r.label for r in report.failures())
        logger.warning(f"{identity} n={n} FAILED on {failed}")
    return report
