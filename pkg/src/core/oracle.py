"""
Representation Count Oracle
Ground-truth counts of sums of squares and triangular numbers, plus the classical divisor sums
"""

import logging
from enum import Enum
from functools import lru_cache
from typing import List, Union

from sympy import divisors

from .exceptions import RangeTooLarge, UnknownId
from .series import QSeries, q_poch

logger = logging.getLogger(__name__)

ENUM_MAX_SUMMANDS = 8
ENUM_MAX_N = 200

DIVISOR_FORMULAS = ('s2', 's4', 's8', 't2', 't4', 't8')


class RepKind(str, Enum):
    SQUARES = 'squares'
    TRIANGLES = 'triangles'


def _kind(kind: Union[RepKind, str]) -> RepKind:
    try:
        return RepKind(kind)
    except ValueError:
        raise UnknownId(f"unknown representation kind {kind!r}")


def _base_coefficients(kind: RepKind, N: int) -> List[int]:
    coeffs = [0] * (N + 1)
    if kind is RepKind.SQUARES:
        coeffs[0] = 1
        j = 1
        while j * j <= N:
            coeffs[j * j] += 2
            j += 1
    else:
        j = 0
        while j * (j + 1) // 2 <= N:
            coeffs[j * (j + 1) // 2] += 1
            j += 1
    return coeffs


def base_series(kind: Union[RepKind, str], N: int, form: str = 'sum') -> QSeries:
    """The squares theta series 1 + 2 sum q^(n^2) or the triangles series sum q^(n(n+1)/2).

    form='product' builds the same series from its infinite product instead.
    """
    kind = _kind(kind)
    if form == 'sum':
        return QSeries.from_q_coefficients(_base_coefficients(kind, N), N)
    order = 2 * N + 1
    if kind is RepKind.SQUARES:
        # (q^2, -q, -q; q^2)_inf
        return q_poch(1, order, base=2, offset=2) * q_poch(-1, order, base=2, offset=1) ** 2
    # (q^2; q^2)_inf / (q; q^2)_inf
    return q_poch(1, order, base=2, offset=2) / q_poch(1, order, base=2, offset=1)


def _int_mul(a: List[int], b: List[int], N: int) -> List[int]:
    out = [0] * (N + 1)
    nonzero = [(j, y) for j, y in enumerate(b) if y]
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in nonzero:
            if i + j > N:
                break
            out[i + j] += x * y
    return out


@lru_cache(maxsize=256)
def _rep_counts(kind: RepKind, k: int, N: int) -> tuple:
    base = _base_coefficients(kind, N)
    result = [1] + [0] * N
    while k:
        if k & 1:
            result = _int_mul(result, base, N)
        k >>= 1
        if k:
            base = _int_mul(base, base, N)
    return tuple(result)


def rep_counts(kind: Union[RepKind, str], k: int, N: int) -> List[int]:
    """Number of representations of n = 0..N as an ordered sum of k squares or triangles."""
    kind = _kind(kind)
    if k < 0 or N < 0:
        raise RangeTooLarge("k and N must be non-negative")
    return list(_rep_counts(kind, k, N))


def rep_series(kind: Union[RepKind, str], k: int, N: int) -> QSeries:
    return QSeries.from_q_coefficients(rep_counts(kind, k, N), N)


def count_enum(kind: Union[RepKind, str], k: int, n: int) -> int:
    """Representation count by recursive enumeration of the summands."""
    kind = _kind(kind)
    if k > ENUM_MAX_SUMMANDS or n > ENUM_MAX_N:
        raise RangeTooLarge(f"enumeration limited to k <= {ENUM_MAX_SUMMANDS}, n <= {ENUM_MAX_N}")
    if kind is RepKind.SQUARES:
        values = []
        j = 0
        while j * j <= n:
            values.append((j * j, 1 if j == 0 else 2))
            j += 1
    else:
        values = []
        j = 0
        while j * (j + 1) // 2 <= n:
            values.append((j * (j + 1) // 2, 1))
            j += 1

    @lru_cache(maxsize=None)
    def walk(slots: int, rest: int) -> int:
        if slots == 0:
            return 1 if rest == 0 else 0
        total = 0
        for value, multiplicity in values:
            if value > rest:
                break
            total += multiplicity * walk(slots - 1, rest - value)
        return total

    return walk(k, n)


def _odd_sign(d: int) -> int:
    return -1 if ((d - 1) // 2) % 2 else 1


def divisor_count(tag: str, n: int) -> int:
    """Classical divisor-sum formula for two, four and eight squares or triangles."""
    if n < 0:
        raise RangeTooLarge("n must be non-negative")
    if tag == 's2':
        if n == 0:
            return 1
        return 4 * sum(_odd_sign(d) for d in divisors(n) if d % 2)
    if tag == 's4':
        if n == 0:
            return 1
        return 8 * sum(d for d in divisors(n) if d % 4)
    if tag == 's8':
        if n == 0:
            return 1
        return 16 * sum((-1) ** (n + d) * d ** 3 for d in divisors(n))
    if tag == 't2':
        return sum(_odd_sign(d) for d in divisors(4 * n + 1))
    if tag == 't4':
        return sum(divisors(2 * n + 1))
    if tag == 't8':
        return sum(d ** 3 for d in divisors(n + 1) if ((n + 1) // d) % 2)
    raise UnknownId(f"no divisor formula for {tag!r}")


def s4_twisted(n: int) -> int:
    """8 sum_(d | n) (-1)^((d-1)(n/d-1)) d, the twisted four-squares form."""
    if n == 0:
        return 1
    return 8 * sum(d if ((d - 1) * (n // d - 1)) % 2 == 0 else -d for d in divisors(n))


def classical_kind(tag: str) -> RepKind:
    return RepKind.SQUARES if tag.startswith('s') else RepKind.TRIANGLES


def classical_summands(tag: str) -> int:
    return int(tag[1:])
