"""
Rendering of reports, tables and permutation profiles as text, JSON
lines or CSV. The only module that writes to the output stream.
"""
import csv
import io
import json
import sys
from typing import Dict, Iterable, List, Optional, Sequence, TextIO

from ..identities import VerificationReport
from ..kernel import VARIABLES, MultiPoly

TEXT = 'text'
JSON = 'json'
CSV = 'csv'
FORMATS = (TEXT, JSON, CSV)

TABLE_HEADER = ['family', 'n', *VARIABLES, 'num', 'den']
REPORT_HEADER = ['id', 'n', 'pass', 'residual_degree', 'seed', 'elapsed_ms', 'failures']


def _csv_text(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


# Verification reports


def render_reports(reports: Sequence[VerificationReport], fmt: str) -> str:
    if fmt == JSON:
        return "".join(f"{r.to_json()}\n" for r in reports)
    if fmt == CSV:
        return _csv_text(REPORT_HEADER, (
            [
                r.id, r.n, str(r.passed).lower(), r.residual_degree, r.seed,
                '' if r.elapsed_ms is None else r.elapsed_ms,
                ";".join(f.label for f in r.failures()),
            ]
            for r in reports
        ))
    lines = []
    for r in reports:
        lines.append(r.summary())
        for residual in r.failures():
            lines.append(f"    {residual.label} @ t^{residual.degree}: {residual.value}")
    passed = sum(1 for r in reports if r.passed)
    lines.append(f"{passed}/{len(reports)} reports passed")
    return "\n".join(lines) + "\n"


def render_failures(reports: Sequence[VerificationReport]) -> str:
    """One line per failing (id, n, label) for standard error."""
    lines = []
    for r in reports:
        for residual in r.failures():
            sample = "" if residual.sample is None else f" sample {residual.sample}"
            lines.append(
                f"FAIL {r.id} n={r.n} {residual.label}{sample}: {residual.value}"
            )
    return "\n".join(lines) + ("\n" if lines else "")


# Polynomial tables


def polynomial_rows(family: str, n: int, poly: MultiPoly) -> List[List]:
    return [
        [family, n, *exps, c.numerator, c.denominator]
        for exps, c in poly.sorted_terms()
    ]


def render_table(entries: Sequence[Dict], fmt: str) -> str:
    """
    Args:
        entries: dicts with family, n and either poly (MultiPoly) or
            values (list of ints), plus an optional gamma list
    """
    if fmt == CSV:
        rows = []
        for e in entries:
            if 'values' in e:
                zero = [0] * len(VARIABLES)
                rows.extend([e['family'], k, *zero, v, 1] for k, v in enumerate(e['values']))
            else:
                rows.extend(polynomial_rows(e['family'], e['n'], e['poly']))
        return _csv_text(TABLE_HEADER, rows)
    if fmt == JSON:
        out = []
        for e in entries:
            item = {'family': e['family'], 'n': e['n']}
            if 'values' in e:
                item['values'] = e['values']
            else:
                item['polynomial'] = str(e['poly'])
            if 'gamma' in e:
                item['gamma'] = [str(g) for g in e['gamma']]
            out.append(json.dumps(item))
        return "".join(f"{line}\n" for line in out)
    lines = []
    for e in entries:
        if 'values' in e:
            body = ",".join(str(v) for v in e['values'])
        else:
            body = str(e['poly'])
        lines.append(f"{e['family']} n={e['n']}: {body}")
        if 'gamma' in e:
            lines.append("    gamma: " + ", ".join(str(g) for g in e['gamma']))
    return "\n".join(lines) + "\n"


# Permutation profiles


def render_profile(profile: Dict, fmt: str) -> str:
    if fmt == JSON:
        return json.dumps(profile) + "\n"
    lines = [f"permutation: {profile['permutation']}"]
    lines.append("statistics: " + ", ".join(
        f"{k}={v}" for k, v in profile['statistics'].items()
    ))
    for boundary, quad in profile['quadruples'].items():
        lines.append(f"quadruple {boundary}: " + ", ".join(
            f"{k}={v}" for k, v in quad.items()
        ))
    lines.append(f"basic: {profile['basic']}")
    lines.append(f"bi-basic: {profile['bi_basic']}")
    lines.append(f"lmi: {profile['lmi']}  rmi: {profile['rmi']}")
    lines.append(
        f"orbit: canonical {profile['canonical']}, size {profile['orbit_size']}"
    )
    if 'psi' in profile:
        lines.append(f"psi_{profile['psi']['letter']}: {profile['psi']['image']}")
    return "\n".join(lines) + "\n"


def emit(text: str, out: Optional[str] = None, stream: TextIO = None):
    """Write to the --out path, or to stdout."""
    if out:
        with open(out, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        return
    (stream or sys.stdout).write(text)
