"""
Verification Reports
Pydantic models for verification outcomes and the helpers that build them
"""

import logging
from fractions import Fraction
from typing import Any, Dict, List, Literal, Optional, Sequence, Tuple

from pydantic import BaseModel, model_serializer

from ..core.exceptions import TruncationTooSmall
from ..core.series import QSeries

logger = logging.getLogger(__name__)

NUMERIC_DIGITS = 15


class Discrepancy(BaseModel):
    """First location where the two sides disagree"""
    at: int
    lhs: str
    rhs: str


class VerifyReport(BaseModel):
    """Outcome of one verification job"""
    id: str
    params: Dict[str, Any]
    checked_upto: int
    status: Literal['pass', 'fail']
    first_discrepancy: Optional[Discrepancy] = None
    note: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == 'pass'

    @model_serializer(mode='wrap')
    def _omit_empty_note(self, handler):
        data = handler(self)
        if data.get('note') is None:
            data.pop('note', None)
        return data


def format_rat(value) -> str:
    """Exact value as "p/q" with the denominator always written."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_float(value: float) -> str:
    return f"{float(value):.{NUMERIC_DIGITS}g}"


def _params(params: Dict[str, Any]) -> Dict[str, Any]:
    return {key: params[key] for key in sorted(params)}


def _finish(tag: str, params: Dict[str, Any], upto: int,
            discrepancy: Optional[Discrepancy]) -> VerifyReport:
    status = 'pass' if discrepancy is None else 'fail'
    if discrepancy is not None:
        logger.warning(f"{tag} {params}: mismatch at {discrepancy.at}: {discrepancy.lhs} != {discrepancy.rhs}")
    return VerifyReport(id=tag, params=_params(params), checked_upto=upto,
                        status=status, first_discrepancy=discrepancy)


def series_report(tag: str, params: Dict[str, Any], lhs: QSeries, rhs: QSeries,
                  upto: int, unit: str = 'q') -> VerifyReport:
    """Compare two series up to the given order in q (unit 'q') or in u = q^(1/2) (unit 'u')."""
    scale = 2 if unit == 'q' else 1
    valid = min(lhs.order, rhs.order) // scale
    if valid < upto:
        raise TruncationTooSmall(f"{tag}: sides are known to order {valid}, {upto} was requested")
    discrepancy = None
    for n in range(upto + 1):
        left, right = lhs[scale * n], rhs[scale * n]
        if left != right:
            discrepancy = Discrepancy(at=n, lhs=format_rat(left), rhs=format_rat(right))
            break
    if discrepancy is None and unit == 'q':
        for e in range(1, 2 * upto + 1, 2):
            if lhs[e] != rhs[e]:
                discrepancy = Discrepancy(at=e // 2, lhs=format_rat(lhs[e]), rhs=format_rat(rhs[e]))
                break
    return _finish(tag, params, upto, discrepancy)


def sequence_report(tag: str, params: Dict[str, Any], lhs: Sequence, rhs: Sequence,
                    start: int = 1) -> VerifyReport:
    """Compare two sequences indexed from `start`; checked_upto is the last index."""
    discrepancy = None
    for offset, (left, right) in enumerate(zip(lhs, rhs)):
        if Fraction(left) != Fraction(right):
            discrepancy = Discrepancy(at=start + offset, lhs=format_rat(left), rhs=format_rat(right))
            break
    return _finish(tag, params, start + min(len(lhs), len(rhs)) - 1, discrepancy)


def cases_report(tag: str, params: Dict[str, Any], cases: Sequence[Tuple[Any, Any]]) -> VerifyReport:
    """Exact comparisons on a list of cases; checked_upto is the number of cases."""
    discrepancy = None
    for index, (left, right) in enumerate(cases):
        if isinstance(left, QSeries) or isinstance(right, QSeries):
            at = left.first_mismatch(right)
            if at is not None:
                discrepancy = Discrepancy(at=index, lhs=format_rat(left[at]), rhs=format_rat(right[at]))
                break
        elif Fraction(left) != Fraction(right):
            discrepancy = Discrepancy(at=index, lhs=format_rat(left), rhs=format_rat(right))
            break
    return _finish(tag, params, len(cases), discrepancy)


def numeric_report(tag: str, params: Dict[str, Any], pairs: Sequence[Tuple[float, float]],
                   tolerance: float, terms: int) -> VerifyReport:
    """Floating comparisons: pass when every residual is below the tolerance."""
    discrepancy = None
    for index, (left, right) in enumerate(pairs):
        if not abs(left - right) < tolerance:
            discrepancy = Discrepancy(at=index, lhs=format_float(left), rhs=format_float(right))
            break
    return _finish(tag, params, terms, discrepancy)


def merge(tag: str, params: Dict[str, Any], reports: List[VerifyReport]) -> VerifyReport:
    """One report for several sub-checks: the first failure wins."""
    for report in reports:
        if not report.passed:
            return _finish(tag, params, report.checked_upto, report.first_discrepancy)
    upto = min(r.checked_upto for r in reports) if reports else 0
    return _finish(tag, params, upto, None)
