"""
Command Line Interface
Batch verification of catalog identities, representation count tables and the catalog listing
"""

import argparse
import csv
import json
import logging
import sys
from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Sequence, TextIO, Tuple

from pydantic import BaseModel, Field, ValidationError

from .config.settings import OUTPUT_FORMATS, Settings, get_settings
from .core.exceptions import EllipsumError, InvalidParams, InvalidPoints, RangeTooLarge
from .core.oracle import RepKind, rep_counts
from .identities.catalog import (
    MAX_NMAX,
    expand_jobs,
    is_count_formula,
    list_identities,
    resolve,
)
from .identities.counts import M_RANGES, check_range, formula_counts, oracle_target
from .identities.reports import format_rat
from .identities.runner import iter_reports

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

COUNT_HEADER = ('n', 'oracle', 'formula', 'match')
VERIFY_HEADER = ('id', 'params', 'checked_upto', 'status', 'at', 'lhs', 'rhs')
TABLE_HEADER = ('id', 'kind', 'unit', 'ranges', 'title', 'anchor')


class RunConfig(BaseModel):
    """Resolved options of one CLI invocation"""
    ids: List[str] = Field(default_factory=lambda: ['*'])
    order: Optional[int] = Field(default=None, ge=1)
    output_format: Literal['json', 'csv', 'text'] = 'json'
    jobs: int = Field(default=1, ge=1)
    overrides: Dict[str, Any] = Field(default_factory=dict)


def parse_points(raw: Optional[str]) -> Optional[Tuple[Fraction, ...]]:
    """'2,3,1/2' -> (2, 3, 1/2) as Fractions."""
    if raw is None:
        return None
    try:
        return tuple(Fraction(part.strip()) for part in raw.split(',') if part.strip())
    except (ValueError, ZeroDivisionError):
        raise InvalidPoints(f"cannot read points from {raw!r}")


def build_config(args: argparse.Namespace, current: Settings) -> RunConfig:
    """The flag beats ELLIPSUM_ORDER, which beats each identity's own default."""
    overrides = {
        'm': getattr(args, 'm', None),
        'k': getattr(args, 'k', None),
        'nmax': getattr(args, 'nmax', None),
        'points': parse_points(getattr(args, 'points', None)),
    }
    return RunConfig(
        ids=getattr(args, 'ids', None) or ['*'],
        order=args.order if getattr(args, 'order', None) is not None else current.order,
        output_format=args.format or current.output_format,
        jobs=getattr(args, 'jobs', None) or current.jobs,
        overrides={name: value for name, value in overrides.items() if value is not None},
    )


# Output

def _csv_writer(out: TextIO):
    return csv.writer(out, lineterminator='\n')


def write_reports(reports, output_format: str, out: TextIO) -> bool:
    """Stream reports as they arrive; True when every report passed."""
    all_passed = True
    writer = _csv_writer(out)
    if output_format == 'csv':
        writer.writerow(VERIFY_HEADER)
    for report in reports:
        all_passed = all_passed and report.passed
        gap = report.first_discrepancy
        if output_format == 'json':
            out.write(report.model_dump_json() + '\n')
        elif output_format == 'csv':
            writer.writerow([report.id, json.dumps(report.params, sort_keys=True), report.checked_upto,
                             report.status, gap.at if gap else '', gap.lhs if gap else '', gap.rhs if gap else ''])
        else:
            line = f"{report.status.upper():4}  {report.id:12}  upto {report.checked_upto:<5}  " \
                   f"{json.dumps(report.params, sort_keys=True)}"
            if gap:
                line += f"  first mismatch at {gap.at}: {gap.lhs} != {gap.rhs}"
            if report.note:
                line += f"  ({report.note})"
            out.write(line + '\n')
        out.flush()
    return all_passed


def _render_count(value) -> Any:
    if isinstance(value, Fraction) and value.denominator != 1:
        return format_rat(value)
    return int(value)


def write_count_table(rows: List[Dict[str, Any]], output_format: str, out: TextIO) -> None:
    if output_format == 'json':
        out.write(json.dumps(rows) + '\n')
        return
    if output_format == 'csv':
        writer = _csv_writer(out)
        writer.writerow(COUNT_HEADER)
        for row in rows:
            match = '' if row['match'] is None else str(row['match']).lower()
            formula = '' if row['formula'] is None else row['formula']
            writer.writerow([row['n'], row['oracle'], formula, match])
        return
    for row in rows:
        cells = [f"{row['n']:>6}", f"{row['oracle']:>14}"]
        if row['formula'] is not None:
            cells += [f"{row['formula']:>14}", 'ok' if row['match'] else 'MISMATCH']
        out.write('  '.join(cells) + '\n')


def write_table(pattern: Optional[str], output_format: str, out: TextIO) -> None:
    entries = list_identities(pattern)
    if output_format == 'json':
        out.write(json.dumps([entry.model_dump() for entry in entries], indent=2) + '\n')
        return
    ranges = [', '.join(f"{name} {low}..{high}" for name, (low, high) in entry.ranges.items())
              for entry in entries]
    if output_format == 'csv':
        writer = _csv_writer(out)
        writer.writerow(TABLE_HEADER)
        for entry, span in zip(entries, ranges):
            writer.writerow([entry.id, entry.kind, entry.unit, span, entry.title, entry.anchor])
        return
    for entry, span in zip(entries, ranges):
        out.write(f"{entry.id:14} {entry.kind:8} {entry.unit:6} {span:34} {entry.title}\n")
        out.write(f"{'':14} anchor: \"{entry.anchor}\"\n")


# Commands

def cmd_verify(config: RunConfig, out: Optional[TextIO] = None) -> int:
    """Run every job of the matching rows; all jobs are validated before the first one runs."""
    rows = resolve(config.ids)
    jobs = []
    for row in rows:
        jobs.extend(expand_jobs(row, config.overrides, default_order=config.order))
    logger.info(f"verify: {len(rows)} identities, {len(jobs)} jobs")
    passed = write_reports(iter_reports(jobs, config.jobs), config.output_format, out or sys.stdout)
    return EXIT_PASS if passed else EXIT_FAIL


def count_table(kind: str, k: int, nmax: int, using: Optional[str] = None,
                m: Optional[int] = None) -> List[Dict[str, Any]]:
    """Rows n, oracle count, and with `using` the formula's count and whether they agree."""
    try:
        rep_kind = RepKind(kind)
    except ValueError:
        raise InvalidParams(f"kind must be squares or triangles, got {kind!r}", param='kind')
    if k < 1:
        raise InvalidParams(f"k must be positive, got {k}", param='k')
    if nmax < 1:
        raise InvalidParams(f"nmax must be positive, got {nmax}", param='nmax')
    if nmax > MAX_NMAX:
        raise RangeTooLarge(f"count tables stop at n = {MAX_NMAX}, got nmax = {nmax}")
    formula = None
    if using is not None:
        if not is_count_formula(using):
            raise InvalidParams(f"{using} is not a counting formula", param='using')
        check_range(using, m, nmax)
        if using not in M_RANGES:
            m = None
        target = oracle_target(using, m)
        if target != (rep_kind, k):
            raise InvalidParams(f"{using} counts {target[1]} {target[0].value}, not {k} {kind}", param='using')
        formula = formula_counts(using, m, nmax)
    oracle = rep_counts(rep_kind, k, nmax)
    rows = []
    for n in range(1, nmax + 1):
        value = None if formula is None else _render_count(formula[n])
        rows.append({'n': n, 'oracle': oracle[n], 'formula': value,
                     'match': None if formula is None else formula[n] == oracle[n]})
    return rows


def cmd_count(args: argparse.Namespace, config: RunConfig, out: Optional[TextIO] = None) -> int:
    rows = count_table(args.kind, args.count_k, args.nmax or 100, args.using, args.m)
    write_count_table(rows, config.output_format, out or sys.stdout)
    if any(row['match'] is False for row in rows):
        return EXIT_FAIL
    return EXIT_PASS


def cmd_table(args: argparse.Namespace, config: RunConfig, out: Optional[TextIO] = None) -> int:
    write_table(None if args.catalog else args.tag, config.output_format, out or sys.stdout)
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='ellipsum',
        description='Exact verification of theta function, pfaffian and sums of squares identities.',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    verify = sub.add_parser('verify', help='verify catalog identities')
    verify.add_argument('ids', nargs='*', help='identity tags or globs (default: all)')
    verify.add_argument('--order', '-N', type=int, help='truncation order (overrides ELLIPSUM_ORDER)')
    verify.add_argument('--m', type=int, help='family parameter m')
    verify.add_argument('--k', type=int, help='parameter k')
    verify.add_argument('--nmax', type=int, help='last n for counting identities')
    verify.add_argument('--points', help='comma separated rational points, e.g. 2,3,1/2')
    verify.add_argument('--jobs', type=int, help='worker processes (default: ELLIPSUM_JOBS)')
    verify.add_argument('--format', choices=OUTPUT_FORMATS)

    count = sub.add_parser('count', help='representation counts, optionally against a formula')
    count.add_argument('kind', help='squares or triangles')
    count.add_argument('count_k', type=int, metavar='k', help='number of summands')
    count.add_argument('--nmax', type=int, help='last n (default 100)')
    count.add_argument('--using', metavar='TAG', help='counting formula to compare with')
    count.add_argument('--m', type=int, help='family parameter of the formula')
    count.add_argument('--format', choices=OUTPUT_FORMATS)

    table = sub.add_parser('table', help='list catalog identities')
    table.add_argument('--catalog', action='store_true', help='list every row (the default without --tag)')
    table.add_argument('--tag', help='tag glob filter')
    table.add_argument('--format', choices=OUTPUT_FORMATS)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = build_config(args, get_settings())
        if args.command == 'verify':
            return cmd_verify(config)
        if args.command == 'count':
            return cmd_count(args, config)
        return cmd_table(args, config)
    except ValidationError as e:
        logger.error(f"invalid options: {e}")
        return EXIT_ERROR
    except EllipsumError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
