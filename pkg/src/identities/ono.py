"""
Ono's Sums of Squares Formulas
The A-coefficients, the Eisenstein-type series E^+ and E^-, the coefficient and Hankel
forms of the identities and the elementary Lambert identities they reduce to
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Dict, List, Tuple

import sympy

from ..core.exceptions import InvalidParams, UnsupportedRange
from ..core.linalg import determinant
from ..core.oracle import RepKind, rep_series
from ..core.orthopoly import bernoulli
from ..core.series import LambertKind, QSeries, SignTwist, lambert_sum
from .reports import VerifyReport, merge, series_report

logger = logging.getLogger(__name__)

MAX_M = 3
MAX_K = 6
SIGNS = ('+', '-')


def _check_sign(sign: str) -> None:
    if sign not in SIGNS:
        raise InvalidParams(f"sign must be '+' or '-', got {sign!r}", param='sign')


@lru_cache(maxsize=None)
def ono_A(sign: str, m: int) -> Dict[Tuple[int, ...], int]:
    """Coefficients of prod x_i^(1 or 3) prod_(i<j) (x_j^2 - x_i^2)^2, keyed by exponent vector."""
    _check_sign(sign)
    if not 1 <= m <= MAX_M:
        raise UnsupportedRange(f"A_m is supported for 1 <= m <= {MAX_M}, got {m}")
    xs = sympy.symbols(f'x1:{m + 1}')
    power = 1 if sign == '+' else 3
    expression = sympy.Integer(1)
    for x in xs:
        expression *= x ** power
    for i, j in combinations(range(m), 2):
        expression *= (xs[j] ** 2 - xs[i] ** 2) ** 2
    poly = sympy.Poly(sympy.expand(expression), *xs)
    return {tuple(exponents): int(coefficient) for exponents, coefficient in poly.terms()}


def _sigma(power: int, N: int) -> List[int]:
    """sigma_power(n) for n = 0..N, with sigma(0) = 0."""
    values = [0] * (N + 1)
    for d in range(1, N + 1):
        dp = d ** power
        for n in range(d, N + 1, d):
            values[n] += dp
    return values


def _bernoulli_constant(k: int) -> Fraction:
    """(-1)^k |B_2k| / 4k."""
    return (-1) ** k * abs(bernoulli(2 * k)[2 * k]) / (4 * k)


@lru_cache(maxsize=256)
def ono_E(sign: str, two_k: int, order: int) -> QSeries:
    """E^+(2k) or E^-(2k) to q-order `order`."""
    _check_sign(sign)
    if two_k % 2 or not 1 <= two_k // 2 <= MAX_K:
        raise UnsupportedRange(f"E(2k) is supported for even 2 <= 2k <= {2 * MAX_K}, got {two_k}")
    k = two_k // 2
    c = _bernoulli_constant(k)
    sigma = _sigma(2 * k - 1, order)
    values = [Fraction(0)] * (order + 1)
    if sign == '+':
        values[0] = (2 ** (4 * k - 1) - 2 ** (2 * k - 1)) * c
        for n in range(1, order + 1):
            if 4 * n <= order:
                values[4 * n] += 2 ** (4 * k - 1) * sigma[n]
            values[n] -= 2 ** (2 * k - 1) * sigma[n]
    else:
        values[0] = (2 ** (2 * k) - 1) * c
        for n in range(1, order + 1):
            if 2 * n <= order:
                values[2 * n] += 2 ** (2 * k) * sigma[n]
            values[n] -= (-1) ** n * sigma[n]
    return QSeries.from_q_coefficients(values, order)


def ono_E_lambert(sign: str, two_k: int, order: int) -> QSeries:
    """E^+(2k) and E^-(2k) through the Lambert series of the tangent-number moments."""
    _check_sign(sign)
    k = two_k // 2
    head = (4 ** k - 1) * abs(bernoulli(2 * k)[2 * k]) / k
    U = 2 * order + 1
    if sign == '+':
        tail = lambert_sum(LambertKind.PLUS, 2 * k - 1, SignTwist.NONE, U) * (4 * (-1) ** (k + 1))
        return (tail + head) * (Fraction((-1) ** k) * Fraction(2) ** (2 * k - 3))
    tail = lambert_sum(LambertKind.MINUS, 2 * k - 1, SignTwist.NONE, U) * (4 * (-1) ** k)
    return (tail + head) * Fraction((-1) ** k, 4)


def _superfactorial(n: int) -> int:
    value = 1
    for i in range(1, n + 1):
        value *= factorial(i)
    return value


def ot_prefactor(eps: int, m: int) -> Fraction:
    """Prefactor of the Hankel form; the coefficient form carries an extra 1/m!."""
    if eps == 0:
        return Fraction((-1) ** m * 4 ** m, _superfactorial(2 * m - 1))
    return Fraction(2 ** (2 * m * m + 3 * m), _superfactorial(2 * m))


def ot_coefficient_form(eps: int, m: int, order: int) -> QSeries:
    sign = '+' if eps == 0 else '-'
    total = QSeries.zero(2 * order + 1)
    for exponents, coefficient in sorted(ono_A(sign, m).items()):
        term = QSeries.constant(coefficient, 2 * order + 1)
        for a in exponents:
            term = term * ono_E(sign, a + 1, order)
        total = total + term
    return total * (ot_prefactor(eps, m) / factorial(m))


def ot_hankel_form(eps: int, m: int, order: int) -> QSeries:
    sign = '+' if eps == 0 else '-'
    base = 2 if eps == 0 else 4
    matrix = [[ono_E(sign, 2 * (i + j) + base, order) for j in range(m)] for i in range(m)]
    return determinant(matrix) * ot_prefactor(eps, m)


def verify_ot(eps: int, m: int, order: int) -> VerifyReport:
    """Both forms of Ono's identities against the squares power, plus the E bridges."""
    tag = 'ot_sq' if eps == 0 else 'ot_oct'
    sign = '+' if eps == 0 else '-'
    if not 1 <= m <= MAX_M:
        raise UnsupportedRange(f"{tag} is supported for 1 <= m <= {MAX_M}, got {m}")
    params = {'m': m, 'order': order}
    lhs = rep_series(RepKind.SQUARES, 4 * m * m if eps == 0 else 4 * m * (m + 1), order)
    reports = [
        series_report(tag, params, ot_coefficient_form(eps, m, order), lhs, order),
        series_report(tag, params, ot_hankel_form(eps, m, order), lhs, order),
    ]
    top = 2 * m - 1 if eps == 0 else 2 * m
    for k in range(1, top + 1):
        reports.append(series_report(tag, {'k': k, 'order': order},
                                     ono_E(sign, 2 * k, order), ono_E_lambert(sign, 2 * k, order), order))
    return merge(tag, params, reports)


def verify_oe(sign: str, k: int, order: int) -> VerifyReport:
    """The elementary double-sum identities behind the E bridges."""
    _check_sign(sign)
    if not 1 <= k <= MAX_K:
        raise UnsupportedRange(f"k must lie in 1..{MAX_K}, got {k}")
    tag = 'oe_plus' if sign == '+' else 'oe_minus'
    w = 2 * k - 1
    lhs = [0] * (order + 1)
    rhs = [0] * (order + 1)
    for l in range(1, order + 1):
        for m in range(1, order // l + 1):
            n = l * m
            if sign == '+':
                lhs[n] += l ** w
                if 4 * n <= order:
                    lhs[4 * n] -= 2 * (2 * l) ** w
                rhs[n] += (-1) ** ((l - 1) * (m - 1)) * l ** w
            else:
                if 2 * n <= order:
                    lhs[2 * n] += 2 * (2 * l) ** w
                lhs[n] -= l ** w
                rhs[n] += (-1) ** l * l ** w
    return series_report(tag, {'k': k, 'order': order},
                         QSeries.from_q_coefficients(lhs, order), QSeries.from_q_coefficients(rhs, order), order)
