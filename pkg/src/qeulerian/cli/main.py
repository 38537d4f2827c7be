"""
Command-line front end.

    qeulerian verify --id all --n-max 4
    qeulerian table --family eulerian --n 3
    qeulerian inspect "5 10 2 12 4 13 6 1 11 3 9 8 15 7 14" --psi 2
    qeulerian list
"""
import argparse
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Tuple

from pydantic import (
    BaseModel, ConfigDict, Field, ValidationError, field_validator,
    model_validator,
)

from .. import __version__, config
from ..core.exceptions import (
    EXIT_FAILURE, EXIT_OK, EXIT_USAGE, ConfigurationError, PermutationError,
    QEulerianException,
)
from ..decomp import (
    basic_decomposition, bi_basic_decomposition, orbit, orbit_canonicalize,
    psi_x,
)
from ..identities import (
    EULER_NUMBERS_FAMILY, TABLE_FAMILIES, TruncationPolicy,
    VerificationReport, euler_numbers, gamma_extract, get_family,
    get_verifier, identity_ids, lhs_family, verify_identity,
)
from ..permstats import (
    Boundary, Permutation, classic_stats, lmi_letters, quadruple_stats,
    rmi_letters,
)
from .render import (
    CSV, FORMATS, JSON, TEXT, emit, render_failures, render_profile,
    render_reports, render_table,
)

logger = logging.getLogger(__name__)

ALL = 'all'
COMMANDS = ('verify', 'table', 'inspect', 'list')


class RunConfig(BaseModel):
    """Validated command-line options."""

    model_config = ConfigDict(frozen=True)

    command: str
    ids: Tuple[str, ...] = ()
    family: Optional[str] = None
    n_max: int = Field(default_factory=lambda: config.DEFAULT_N_MAX, ge=0)
    n: Optional[int] = Field(default=None, ge=0)
    t_order: Optional[int] = Field(default=None, ge=1)
    q_window: Optional[int] = Field(default=None, ge=1)
    seed: int = Field(default_factory=lambda: config.DEFAULT_SEED)
    sample_count: Optional[int] = Field(default=None, ge=1)
    format: str = TEXT
    out: Optional[str] = None
    exhaustive_grid: bool = False
    timings: bool = False
    gamma: bool = False
    permutation: Optional[str] = None
    psi: Optional[int] = None

    @field_validator('command')
    @classmethod
    def known_command(cls, v: str) -> str:
        if v not in COMMANDS:
            raise ValueError(f"Unknown command '{v}'")
        return v

    @field_validator('format')
    @classmethod
    def known_format(cls, v: str) -> str:
        if v not in FORMATS:
            raise ValueError(f"Format must be one of {', '.join(FORMATS)}")
        return v

    @model_validator(mode='after')
    def command_arguments(self) -> 'RunConfig':
        if self.command == 'table' and not self.family:
            raise ValueError("table needs --family")
        if self.command == 'inspect' and self.permutation is None:
            raise ValueError("inspect needs a permutation word")
        return self

    def sizes(self) -> List[int]:
        if self.n is not None:
            return [self.n]
        return list(range(1, self.n_max + 1))

    def policy(self) -> TruncationPolicy:
        n_max = max(self.sizes(), default=1)
        return TruncationPolicy.default(
            n_max,
            t_order=self.t_order,
            q_window=self.q_window,
            seed=self.seed,
            sample_count=self.sample_count,
            exhaustive_grid=self.exhaustive_grid,
        )

    def identity_list(self) -> List[str]:
        if not self.ids or ALL in self.ids:
            return identity_ids()
        return list(dict.fromkeys(self.ids))


# Commands


def cmd_verify(cfg: RunConfig) -> int:
    """Run every requested (id, n); exit 0 iff every report passes."""
    policy = cfg.policy()
    tasks = []
    for identity in cfg.identity_list():
        first = max(1, get_verifier(identity).min_n)
        tasks.extend((identity, n) for n in cfg.sizes() if n >= first)
    tasks.sort()
    threads = min(config.THREADS, max(len(tasks), 1))
    logger.info(f"Running {len(tasks)} verifications on {threads} thread(s)")

    def run(task) -> VerificationReport:
        identity, n = task
        try:
            return verify_identity(identity, n, policy, timings=cfg.timings)
        except QEulerianException:
            raise
        except Exception:
            logger.error(f"Unexpected error in {identity} n={n}", exc_info=True)
            raise

    with ThreadPoolExecutor(max_workers=threads) as pool:
        reports = list(pool.map(run, tasks))

    emit(render_reports(reports, cfg.format), cfg.out)
    failures = render_failures(reports)
    if failures:
        sys.stderr.write(failures)
        return EXIT_FAILURE
    return EXIT_OK


def table_entries(cfg: RunConfig) -> List[Dict]:
    if cfg.family == EULER_NUMBERS_FAMILY:
        top = max(cfg.sizes(), default=0)
        return [{'family': cfg.family, 'n': top, 'values': euler_numbers(top)}]
    family = get_family(cfg.family)
    entries = []
    for n in cfg.sizes():
        if n < family.min_n:
            continue
        entry = {'family': cfg.family, 'n': n, 'poly': lhs_family(cfg.family, n)}
        if cfg.gamma:
            entry['gamma'] = gamma_extract(entry['poly'])
        entries.append(entry)
    return entries


def cmd_table(cfg: RunConfig) -> int:
    emit(render_table(table_entries(cfg), cfg.format), cfg.out)
    return EXIT_OK


_BOUNDARIES = (
    Boundary.ZERO_ZERO, Boundary.ZERO_INF, Boundary.INF_ZERO, Boundary.INF_INF,
)


def permutation_profile(p: Permutation, psi: Optional[int] = None) -> Dict:
    """Everything inspect prints about one permutation."""
    profile = {
        'permutation': str(p),
        'statistics': classic_stats(p).as_dict(),
        'quadruples': {
            str(b): quadruple_stats(p, b).as_dict() for b in _BOUNDARIES
        },
        'basic': basic_decomposition(p).format(),
        'bi_basic': bi_basic_decomposition(p).format() if len(p) else "",
        'lmi': sorted(lmi_letters(p)),
        'rmi': sorted(rmi_letters(p)),
        'canonical': str(orbit_canonicalize(p)),
        'orbit_size': len(orbit(p)) if len(p) else 1,
    }
    if psi is not None:
        profile['psi'] = {'letter': psi, 'image': str(psi_x(p, psi))}
    return profile


def cmd_inspect(cfg: RunConfig) -> int:
    if cfg.format == CSV:
        raise ConfigurationError("inspect renders text or json only")
    p = Permutation.parse(cfg.permutation)
    if len(p) == 0:
        raise PermutationError("inspect needs a nonempty permutation word")
    emit(render_profile(permutation_profile(p, cfg.psi), cfg.format), cfg.out)
    return EXIT_OK


def cmd_list(cfg: RunConfig) -> int:
    lines = ["identities:"]
    lines.extend(
        f"  {i:<22} {get_verifier(i).description}" for i in identity_ids()
    )
    lines.append("families:")
    lines.extend(f"  {name}" for name in TABLE_FAMILIES)
    emit("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK


_HANDLERS = {
    'verify': cmd_verify,
    'table': cmd_table,
    'inspect': cmd_inspect,
    'list': cmd_list,
}


# Argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='qeulerian',
        description="Exact q-Stirling-Eulerian identity verification",
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest='command', required=True)

    def common(p):
        p.add_argument('--format', choices=FORMATS, default=TEXT, help="Output format")
        p.add_argument('--out', default=None, help="Write output to this file")

    verify = sub.add_parser('verify', help="Run identity verifiers")
    verify.add_argument(
        '--id', dest='ids', action='append', default=None,
        help="Identity id, repeatable, or 'all' (default)",
    )
    verify.add_argument('--n-max', type=int, default=None, help="Check sizes 1..N")
    verify.add_argument('--n', type=int, default=None, help="Check one size only")
    verify.add_argument('--t-order', type=int, default=None, help="Series truncation order")
    verify.add_argument('--q-window', type=int, default=None, help="Product factors K")
    verify.add_argument('--seed', type=int, default=None, help="Sampler seed")
    verify.add_argument('--samples', type=int, default=None, help="Random schemes per check")
    verify.add_argument(
        '--exhaustive-grid', action='store_true',
        help="Use the full value grid instead of random schemes for small n",
    )
    verify.add_argument('--timings', action='store_true', help="Record elapsed_ms")
    common(verify)

    table = sub.add_parser('table', help="Print a polynomial family")
    table.add_argument('--family', required=True, help="Family name, see list")
    table.add_argument('--n-max', type=int, default=None, help="Sizes 1..N")
    table.add_argument('--n', type=int, default=None, help="One size only")
    table.add_argument('--gamma', action='store_true', help="Also print the gamma-vector")
    common(table)

    inspect = sub.add_parser('inspect', help="Statistics and decompositions of a permutation")
    inspect.add_argument('permutation', help="Word such as 2164573 or '5 10 2 12'")
    inspect.add_argument('--psi', type=int, default=None, help="Also apply psi_x for this letter")
    common(inspect)

    listing = sub.add_parser('list', help="Known identity ids and families")
    listing.add_argument('--out', default=None, help="Write output to this file")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = {
        'command': args.command,
        'ids': tuple(getattr(args, 'ids', None) or ()),
        'family': getattr(args, 'family', None),
        'n': getattr(args, 'n', None),
        't_order': getattr(args, 't_order', None),
        'q_window': getattr(args, 'q_window', None),
        'sample_count': getattr(args, 'samples', None),
        'format': getattr(args, 'format', TEXT),
        'out': getattr(args, 'out', None),
        'exhaustive_grid': getattr(args, 'exhaustive_grid', False),
        'timings': getattr(args, 'timings', False),
        'gamma': getattr(args, 'gamma', False),
        'permutation': getattr(args, 'permutation', None),
        'psi': getattr(args, 'psi', None),
    }
    for name in ('n_max', 'seed'):
        value = getattr(args, name, None)
        if value is not None:
            values[name] = value
    return RunConfig(**values)


def setup_logging():
    logging.basicConfig(
        level=getattr(logging, str(config.LOG_LEVEL).upper(), logging.WARNING),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
        stream=sys.stderr,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run one command, map errors to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    setup_logging()
    try:
        cfg = config_from_args(args)
        return _HANDLERS[cfg.command](cfg)
    except QEulerianException as e:
        sys.stderr.write(f"{e.error_code}: {e.message}\n")
        return e.exit_code
    except ValidationError as e:
        sys.stderr.write(f"USAGE_ERROR: {e}\n")
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
