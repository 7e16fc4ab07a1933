"""
Modular Transformation Checks
Floating-point spot checks of the theta modular transformation and its triangle/square special case
"""

import logging
from typing import Optional, Sequence

from mpmath import mp, mpf

from ..core.exceptions import InvalidParams
from .reports import VerifyReport, numeric_report

logger = logging.getLogger(__name__)

DEFAULT_H = (0.7, 1.0, 1.3)
DEFAULT_X = (0.3, 0.5)
DEFAULT_TERMS = 60
TOLERANCE = 1e-9
WORKING_DPS = 30


def _check(h: float, terms: int) -> None:
    if not 0.5 <= h <= 2:
        raise InvalidParams(f"h must lie in [0.5, 2], got {h}", param='h')
    if terms < 1:
        raise InvalidParams(f"terms must be positive, got {terms}", param='terms')


def _theta(x, q, terms: int):
    """(x, q/x; q) truncated to `terms` factors each."""
    return mp.qp(x, q, terms) * mp.qp(q / x, q, terms)


def mtt_residual(h: float, x: float, terms: int = DEFAULT_TERMS) -> float:
    """|theta(e^(2 pi i x); e^(-2 pi/h)) - right side of the modular transformation|."""
    _check(h, terms)
    with mp.workdps(WORKING_DPS):
        h, x = mpf(h), mpf(x)
        q = mp.exp(-2 * mp.pi / h)
        p = mp.exp(-2 * mp.pi * h)
        lhs = _theta(mp.exp(2j * mp.pi * x), q, terms)
        rhs = (-1j * mp.sqrt(h) * mp.exp(-mp.pi * (h - 1 / h) / 4)
               * mp.qp(p, p, terms) / mp.qp(q, q, terms)
               * mp.exp(mp.pi * x * (1j + h * (1 - x)))
               * _theta(mp.exp(-2 * mp.pi * h * x), p, terms))
        return float(abs(lhs - rhs))


def mts_residual(h: float, terms: int = DEFAULT_TERMS) -> float:
    """|triangle(e^(-2 pi/h)) - sqrt(h)/2 e^(pi/4h) square(-e^(-pi h))|."""
    _check(h, terms)
    with mp.workdps(WORKING_DPS):
        h = mpf(h)
        q = mp.exp(-2 * mp.pi / h)
        triangle = mp.qp(q * q, q * q, terms) / mp.qp(q, q * q, terms)
        r = -mp.exp(-mp.pi * h)
        square = mp.qp(r * r, r * r, terms) * mp.qp(-r, r * r, terms) ** 2
        rhs = mp.sqrt(h) / 2 * mp.exp(mp.pi / (4 * h)) * square
        return float(abs(triangle - rhs))


def modular_numeric_check(h: float, x: Optional[float] = None, terms: int = DEFAULT_TERMS) -> float:
    """Residual of the transformation at (h, x), or of its special case when x is None."""
    residual = mts_residual(h, terms) if x is None else mtt_residual(h, x, terms)
    logger.debug(f"modular check h={h} x={x} terms={terms}: residual {residual:.3e}")
    return residual


def verify_mtt(hs: Sequence[float] = DEFAULT_H, xs: Sequence[float] = DEFAULT_X,
               terms: int = DEFAULT_TERMS, tolerance: float = TOLERANCE) -> VerifyReport:
    pairs = [(mtt_residual(h, x, terms), 0.0) for h in hs for x in xs]
    params = {'h': list(hs), 'terms': terms, 'tolerance': tolerance, 'x': list(xs)}
    return numeric_report('mtt_numeric', params, pairs, tolerance, terms)


def verify_mts(hs: Sequence[float] = DEFAULT_H, terms: int = DEFAULT_TERMS,
               tolerance: float = TOLERANCE) -> VerifyReport:
    pairs = [(mts_residual(h, terms), 0.0) for h in hs]
    params = {'h': list(hs), 'terms': terms, 'tolerance': tolerance}
    return numeric_report('mts_numeric', params, pairs, tolerance, terms)
