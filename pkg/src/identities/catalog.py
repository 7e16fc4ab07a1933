"""
Identity Catalog
Every verifiable claim as a row: anchor quote, parameter defaults, supported ranges and its runner
"""

import logging
from dataclasses import dataclass, field
from fnmatch import fnmatchcase
from fractions import Fraction
from itertools import product
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from ..core.exceptions import InvalidParams, UnknownIdentity
from . import exact_checks as ex
from . import modular
from . import ono
from . import series_checks as sc
from .counts import FIXED_TAGS, M_RANGES, check_range, formula_counts, oracle_counts
from .reports import VerifyReport, sequence_report

logger = logging.getLogger(__name__)

Params = Dict[str, Any]
Runner = Callable[[Params], List[VerifyReport]]
Job = Tuple[str, Params]

MAX_ORDER = 2000
MAX_NMAX = 2000

KIND_COUNT = 'count'
KIND_SERIES = 'series'
KIND_EXACT = 'exact'
KIND_NUMERIC = 'numeric'


class CatalogEntry(BaseModel):
    """Public view of a catalog row"""
    id: str
    kind: str
    unit: str
    title: str
    anchor: str
    params: Dict[str, Any]
    ranges: Dict[str, List[int]]


@dataclass(frozen=True)
class IdentityRow:
    """A catalog row. List-valued defaults are swept, one job per combination."""

    tag: str
    kind: str
    unit: str
    title: str
    anchor: str
    runner: Runner
    defaults: Params = field(default_factory=dict)
    ranges: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    points_parity: Optional[int] = None

    def entry(self) -> CatalogEntry:
        return CatalogEntry(
            id=self.tag,
            kind=self.kind,
            unit=self.unit,
            title=self.title,
            anchor=self.anchor,
            params={name: _render(value) for name, value in self.defaults.items()},
            ranges={name: list(bounds) for name, bounds in self.ranges.items()},
        )


def _render(value: Any) -> Any:
    if isinstance(value, list):
        return [_render(v) for v in value]
    if isinstance(value, tuple):
        return ','.join(str(x) for x in value)
    return value


def points(*values: int) -> Tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


# Count rows

def count_report(tag: str, m: Optional[int], nmax: int) -> VerifyReport:
    """Formula values against the brute-force oracle for 1 <= n <= nmax."""
    check_range(tag, m, nmax)
    params: Params = {'nmax': nmax}
    if m is not None:
        params['m'] = m
    formula = formula_counts(tag, m, nmax)
    oracle = oracle_counts(tag, m, nmax)
    return sequence_report(tag, params, formula[1:], oracle[1:], start=1)


def _counts(tag: str) -> Runner:
    def run(p: Params) -> List[VerifyReport]:
        return [count_report(tag, p.get('m'), p['nmax'])]
    return run


HSF18_NOTE = ("18-squares display with the cross factors (k^2-k'^2) and (k^2-k'^2)(k^2-k''^2) "
              "of the general theorem restored; hsf18 checks the display as printed")


def _hsf(p: Params) -> List[VerifyReport]:
    reports = []
    if p['m'] == 2:
        reports.append(count_report('hsf8', None, p['nmax']))
    elif p['m'] == 3:
        reports.append(count_report('hsf18', None, p['nmax']))
        amended = count_report('hsf18_amended', None, p['nmax'])
        reports.append(amended.model_copy(update={'note': HSF18_NOTE}))
    reports.append(count_report('hsf', p['m'], p['nmax']))
    return reports


CLASSICAL = (
    ('s2', "Gauss' two squares and Jacobi's four and eight squares formulas", 'Two squares'),
    ('s4', "Gauss' two squares and Jacobi's four and eight squares formulas", 'Four squares'),
    ('s8', "Gauss' two squares and Jacobi's four and eight squares formulas", 'Eight squares'),
    ('t2', "Legendre's formulas for sums of triangles", 'Two triangles'),
    ('t4', "Legendre's formulas for sums of triangles", 'Four triangles'),
    ('t8', "Legendre's formulas for sums of triangles", 'Eight triangles'),
)


def _count_rows() -> List[IdentityRow]:
    rows = [IdentityRow(tag, KIND_COUNT, 'n', title, anchor, _counts(tag),
                        {'nmax': 1000}, {'nmax': (1, MAX_NMAX)})
            for tag, anchor, title in CLASSICAL]
    parameterized = (
        ('kmt1', 'it implies the triangular number identities', '4m^2 triangles', [1, 2], 100),
        ('kmt2', 'it implies the triangular number identities', '4m(m+1) triangles', [1, 2], 100),
        ('gm', 'further triangular number identities, such as', '2m triangles', [1, 2, 3], 200),
        ('hti', 'triangles identity, which can be written as', '2m^2 triangles', [1, 2], 100),
        ('sst_sq', 'gives the following sums of squares formulas', '4m^2 squares by correlations', [1, 2, 3], 100),
        ('sst_oct', 'gives the following sums of squares formulas', '4m(m+1) squares by correlations', [1, 2, 3], 100),
        ('mt_sq', 'following identities, which are equivalent to', '4m^2 squares by Schur functions', [1, 2, 3], 100),
        ('mt_oct', 'following identities, which are equivalent to', '4m(m+1) squares by Schur functions', [1, 2, 3], 100),
    )
    for tag, anchor, title, ms, nmax in parameterized:
        rows.append(IdentityRow(tag, KIND_COUNT, 'n', title, anchor, _counts(tag),
                                {'m': ms, 'nmax': nmax},
                                {'m': (1, M_RANGES[tag]), 'nmax': (1, MAX_NMAX)}))
    rows.append(IdentityRow('milne16', KIND_COUNT, 'n', 'Sixteen squares', "Milne's $16$ squares formula can be written",
                            _counts('milne16'), {'nmax': 100}, {'nmax': (1, MAX_NMAX)}))
    rows.append(IdentityRow('hsf', KIND_COUNT, 'n', '2m^2 squares', r'where  $\varepsilon=0$ if $m-s_0$',
                            _hsf, {'m': [1, 2, 3], 'nmax': 100},
                            {'m': (1, M_RANGES['hsf']), 'nmax': (1, MAX_NMAX)}))
    return rows


# Series rows

def _order_row(tag: str, title: str, anchor: str, check: Callable[[int], VerifyReport],
               order: int, unit: str = 'q') -> IdentityRow:
    return IdentityRow(tag, KIND_SERIES, unit, title, anchor, lambda p: [check(p['order'])],
                       {'order': order}, {'order': (1, MAX_ORDER)})


def _m_row(tag: str, title: str, anchor: str, check: Callable[[int, int], VerifyReport],
           ms: List[int], m_max: int, order: int) -> IdentityRow:
    return IdentityRow(tag, KIND_SERIES, 'q', title, anchor, lambda p: [check(p['m'], p['order'])],
                       {'m': ms, 'order': order}, {'m': (1, m_max), 'order': (1, MAX_ORDER)})


def _points_row(tag: str, title: str, anchor: str, check: Callable[[Sequence[Fraction], int], VerifyReport],
                point_sets: List[Tuple[Fraction, ...]], order: int, unit: str,
                parity: Optional[int]) -> IdentityRow:
    return IdentityRow(tag, KIND_SERIES, unit, title, anchor, lambda p: [check(p['points'], p['order'])],
                       {'order': order, 'points': point_sets},
                       {'order': (1, MAX_ORDER), 'points': (1, 8)}, parity)


def _series_rows() -> List[IdentityRow]:
    mhd = 'where the numbers $t_k$ are defined in'
    gcc = 'the sum over $k_1,\\dots,k_s$ equals $1$'
    qss = 'reduces to the following identities'
    return [
        _order_row('jtp', 'Jacobi triple product', 'Jacobi\'s triple product identity', sc.verify_jtp, 30),
        _order_row('qp', 'Quasi-periodicity of theta', 'It satisfies', sc.verify_qp, 30),
        _order_row('rp', 'Ramanujan kernel', 'which is a special case of', sc.verify_rp, 30),
        _order_row('ol', 'Logarithmic derivative of theta', 'together with its limit case', sc.verify_ol, 30),
        _order_row('sp', 'Product forms of the squares and triangles series',
                   'implies explicit formulas for the generating functions', sc.verify_sp, 100),
        _order_row('l2', 'Two squares Lambert series', 'the Lambert series versions of', sc.verify_l2, 400),
        _order_row('l4', 'Four squares Lambert series', 'the Lambert series versions of', sc.verify_l4, 400),
        _order_row('l8', 'Eight squares Lambert series', 'the Lambert series versions of', sc.verify_l8, 400),
        _order_row('jl', 'Triangles times squares Lambert series', 'the Lambert series expansion', sc.verify_jl, 400),
        _order_row('jq', 'Triangles as a squares difference', 'which can equivalently be written', sc.verify_jq, 400),
        _order_row('sq_split', 'Squares at -q^2', 'easily verified either from', sc.verify_sq_split, 400),
        _order_row('jacobi8', 'Eight squares split', 'we work out the cases', sc.verify_jacobi8, 100),
        _order_row('hsf8_series', 'Eight squares expansion', 'we work out the cases', sc.verify_hsf8_series, 100),
        _m_row('mhd_sq', '4m^2 squares Hankel determinant', mhd,
               lambda m, order: sc.verify_mhd(0, m, order), [1, 2, 3], 3, 200),
        _m_row('mhd_oct', '4m(m+1) squares Hankel determinant', mhd,
               lambda m, order: sc.verify_mhd(1, m, order), [1, 2, 3], 3, 200),
        IdentityRow('opc', KIND_SERIES, 'q', 'Products of q-deformed norms', 'gives the following reformulation of',
                    lambda p: [sc.verify_opc(p['eps'], p['m'], p['order'])],
                    {'eps': [0, 1], 'm': [1, 2], 'order': 60},
                    {'eps': (0, 1), 'm': (1, 3), 'order': (1, MAX_ORDER)}),
        IdentityRow('pqn', KIND_SERIES, 'q', 'q-deformed norms as squares powers', 'are $q$-analogues of the polynomials',
                    lambda p: [sc.verify_pqn(p['eps'], p['k'], p['order'])],
                    {'eps': [0, 1], 'k': 2, 'order': 60},
                    {'eps': (0, 1), 'k': (0, 4), 'order': (1, MAX_ORDER)}),
        _m_row('gcc_sq', '4m^2 squares by Christoffel-Darboux correlations', gcc,
               lambda m, order: sc.verify_gcc(0, m, order), [1, 2], 3, 60),
        _m_row('gcc_oct', '4m(m+1) squares by Christoffel-Darboux correlations', gcc,
               lambda m, order: sc.verify_gcc(1, m, order), [1, 2], 3, 60),
        _m_row('qss_sq', '4m^2 squares by Schur Q at ones', qss,
               lambda m, order: sc.verify_qss(0, m, order), [1, 2], 3, 100),
        _m_row('qss_oct', '4m(m+1) squares by Schur Q at ones', qss,
               lambda m, order: sc.verify_qss(1, m, order), [1, 2], 3, 100),
        _points_row('eep', 'Even theta pfaffian', 'from the following pfaffian evaluations', sc.verify_eep,
                    [points(1, 2), points(2, 3, 5, 7)], 40, 'q', 0),
        _points_row('oep', 'Odd theta pfaffian', 'from the following pfaffian evaluations', sc.verify_oep,
                    [points(1, 2, 3), points(2, 3, 5, 7, 11)], 40, 'q', 1),
        _points_row('ep', 'Even half-period pfaffian', 'follow from the pfaffian evaluations', sc.verify_ep,
                    [points(1, 2), points(2, 3, 5, 7)], 40, 'u', 0),
        _points_row('op', 'Odd half-period pfaffian', 'follow from the pfaffian evaluations', sc.verify_op,
                    [points(1, 2, 3), points(2, 3, 5, 7, 11)], 40, 'u', 1),
        _points_row('dfe_even', 'Even multivariable Lambert expansion', 'at the multivariable Lambert series',
                    sc.verify_dfe, [points(1, 2), points(2, 3, 5, 7)], 40, 'u', 0),
        _points_row('dfe_odd', 'Odd multivariable Lambert expansion', 'at the multivariable Lambert series',
                    sc.verify_dfe, [points(1, 2, 3), points(2, 3, 5, 7, 11)], 40, 'u', 1),
        _points_row('mdt_even', 'Even Schur Q expansion', 'If $q<|x_j/x_i|<q^{-1}$ for all',
                    sc.verify_mdt, [points(2, 1), points(2, 3, 5, 7)], 20, 'q', 0),
        _points_row('mdt_odd', 'Odd Schur Q expansion', 'If $q<|x_j/x_i|<q^{-1}$ for all',
                    sc.verify_mdt, [points(1, 2, 3), points(2, 3, 5)], 20, 'q', 1),
    ]


# Exact, appendix and numeric rows

def _exact(tag: str, title: str, anchor: str, check: Callable[[], VerifyReport]) -> IdentityRow:
    return IdentityRow(tag, KIND_EXACT, 'cases', title, anchor, lambda p: [check()])


def _exact_rows() -> List[IdentityRow]:
    return [
        _exact('spe', 'Schur pfaffian', 'a classical identity of Schur', ex.verify_spe),
        _exact('pdi', 'Pfaffian squared is the determinant', 'In even dimension', ex.verify_pdi),
        _exact('psl', 'Pfaffian sum expansion', 'The following   lemma will be useful', ex.verify_psl),
        _exact('rol', 'Odd pfaffian row shift invariance',
               'For any odd-dimensional skew-symmetric matrix', ex.verify_rol),
        _exact('sep', 'Separated Schur pfaffian expansion', 'exploit the symmetry in', ex.verify_sep),
        _exact('hdl', 'Hankel determinant as a Vandermonde integral',
               'We recall the following classical result', ex.verify_hdl),
        _exact('hop', 'Hankel determinant as a product of norms',
               'corresponding monic orthogonal polynomials', ex.verify_hop),
        _exact('en', 'Norm products at q = 0', 'agrees with the known expressions for the norms', ex.verify_en),
        _exact('tangent', 'Tangent numbers', 'We find it convenient to define', ex.verify_tangent),
        _exact('muce', 'Moments of the tangent functionals', 'The moments of $\\mu_0$ and $\\mu_1$', ex.verify_muce),
        _exact('mp', 'Interleaved orthogonal system', 'These are Meixner--Pollaczek polynomials', ex.verify_mp),
        _exact('cp', 'Correlation function routes', 'several expressions for correlation functions', ex.verify_cp),
        IdentityRow('hcl', KIND_EXACT, 'q', 'Hankel determinant against correlation sums',
                    'a standard tool of random matrix theory',
                    lambda p: [ex.hcl_check(p['eps'], p['m'], p['K'])],
                    {'K': 20, 'eps': [0, 1], 'm': [1, 2]}, {'K': (1, 60), 'eps': (0, 1), 'm': (1, 3)}),
        _exact('qc', 'Schur Q at ones through correlations', 'also arise from  generalized Schur $Q$-polynomials', ex.verify_qc),
        _exact('qc_general', 'Schur Q at ones for general labels', 'also arise from  generalized Schur $Q$-polynomials',
               ex.verify_qc_general),
        _exact('sym', 'Bialternant and Schur Q laws', 'which are essentially Schur polynomials', ex.verify_sym),
    ]


def _appendix_rows() -> List[IdentityRow]:
    hankel = 'can be written in Hankel determinant form'
    elementary = 'to the elementary identities'
    return [
        _m_row('ot_sq', "Ono's 4m^2 squares formula", hankel, lambda m, order: ono.verify_ot(0, m, order),
               [1, 2], ono.MAX_M, 100),
        _m_row('ot_oct', "Ono's 4m(m+1) squares formula", hankel, lambda m, order: ono.verify_ot(1, m, order),
               [1, 2], ono.MAX_M, 100),
        IdentityRow('oe_plus', KIND_SERIES, 'q', 'Elementary identity for E^+', elementary,
                    lambda p: [ono.verify_oe('+', p['k'], p['order'])],
                    {'k': [1, 2, 3, 4], 'order': 200}, {'k': (1, ono.MAX_K), 'order': (1, MAX_ORDER)}),
        IdentityRow('oe_minus', KIND_SERIES, 'q', 'Elementary identity for E^-', elementary,
                    lambda p: [ono.verify_oe('-', p['k'], p['order'])],
                    {'k': [1, 2, 3, 4], 'order': 200}, {'k': (1, ono.MAX_K), 'order': (1, MAX_ORDER)}),
        IdentityRow('mtt_numeric', KIND_NUMERIC, 'terms', 'Theta modular transformation', 'the modular transformation',
                    lambda p: [modular.verify_mtt(terms=p['terms'])], {'terms': 60}, {'terms': (40, 1000)}),
        IdentityRow('mts_numeric', KIND_NUMERIC, 'terms', 'Triangles and squares at dual nomes',
                    'the special case $x=1/2+i/h$',
                    lambda p: [modular.verify_mts(terms=p['terms'])], {'terms': 60}, {'terms': (40, 1000)}),
    ]


CATALOG: Tuple[IdentityRow, ...] = tuple(_count_rows() + _series_rows() + _exact_rows() + _appendix_rows())
_BY_TAG: Dict[str, IdentityRow] = {row.tag: row for row in CATALOG}


def list_identities(pattern: Optional[str] = None) -> List[CatalogEntry]:
    """Catalog rows in catalog order, optionally filtered by a tag glob."""
    rows = resolve([pattern]) if pattern else list(CATALOG)
    return [row.entry() for row in rows]


def get_identity(tag: str) -> IdentityRow:
    try:
        return _BY_TAG[tag]
    except KeyError:
        raise UnknownIdentity(tag)


def resolve(patterns: Sequence[str]) -> List[IdentityRow]:
    """Rows matching any of the tag globs, in catalog order; every glob must match."""
    for pattern in patterns:
        if not any(fnmatchcase(row.tag, pattern) for row in CATALOG):
            raise UnknownIdentity(pattern)
    return [row for row in CATALOG if any(fnmatchcase(row.tag, p) for p in patterns)]


def is_count_formula(tag: str) -> bool:
    """Tags accepted by `count --using`."""
    return tag in M_RANGES or tag in FIXED_TAGS


# Job expansion

def _check_value(row: IdentityRow, name: str, value: Any) -> None:
    if name == 'points':
        pts = sc.check_points(value)
        low, high = row.ranges.get('points', (1, 8))
        if not low <= len(pts) <= high:
            raise InvalidParams(f"{row.tag} takes {low}..{high} points, got {len(pts)}", param='points')
        if row.points_parity is not None and len(pts) % 2 != row.points_parity:
            kind = 'an even' if row.points_parity == 0 else 'an odd'
            raise InvalidParams(f"{row.tag} needs {kind} number of points", param='points')
        return
    if name in row.ranges:
        low, high = row.ranges[name]
        if not isinstance(value, int) or not low <= value <= high:
            raise InvalidParams(f"{row.tag}: {name} must lie in {low}..{high}, got {value}", param=name)


def expand_jobs(row: IdentityRow, overrides: Optional[Params] = None,
                default_order: Optional[int] = None) -> List[Job]:
    """Jobs for a row: flag overrides beat the configured default order, which beats the row default."""
    overrides = {k: v for k, v in (overrides or {}).items() if v is not None}
    values: Dict[str, List[Any]] = {}
    for name, default in row.defaults.items():
        if name in overrides:
            value = overrides[name]
            choices = [tuple(value)] if name == 'points' else [value]
        elif name == 'order' and default_order is not None:
            choices = [default_order]
        else:
            choices = list(default) if isinstance(default, list) else [default]
        for value in choices:
            _check_value(row, name, value)
        values[name] = choices
    names = list(values)
    jobs = [(row.tag, dict(zip(names, combination))) for combination in product(*(values[n] for n in names))]
    logger.debug(f"{row.tag}: {len(jobs)} jobs")
    return jobs


def run_job(job: Job) -> List[VerifyReport]:
    """Execute one job; top level so that worker processes can unpickle it."""
    tag, params = job
    logger.info(f"job {tag} {params} started")
    reports = get_identity(tag).runner(params)
    for report in reports:
        logger.info(f"job {tag} finished: {report.id} {report.status}")
    return reports


def verify_series(tag: str, params: Optional[Params] = None, order: Optional[int] = None) -> List[VerifyReport]:
    """Run one catalog row; `params` and `order` override the row defaults, unset swept defaults still sweep."""
    overrides = dict(params or {})
    if order is not None:
        overrides['order'] = order
    reports: List[VerifyReport] = []
    for job in expand_jobs(get_identity(tag), overrides):
        reports.extend(run_job(job))
    return reports
