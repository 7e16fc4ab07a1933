"""
Exact Linear Algebra
Determinants, pfaffians and Hankel matrices over Fraction or QSeries entries
"""

import logging
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Dict, List, Optional, Sequence, Union

from .exceptions import (
    DimensionTooLarge,
    InsufficientMoments,
    MatrixError,
    NotSkewSymmetric,
)
from .series import QSeries

logger = logging.getLogger(__name__)

RingElement = Union[Fraction, QSeries]
ExactMatrix = List[List[RingElement]]

DEFINITION_LIMIT = 6


def is_zero(value) -> bool:
    if isinstance(value, QSeries):
        return value.is_zero()
    return value == 0


def _is_scalar(value) -> bool:
    return isinstance(value, (int, Fraction))


def _finish(value, matrix: Sequence[Sequence]):
    """Normalize integer accumulators to the ring of the matrix."""
    if isinstance(value, QSeries):
        return value
    orders = [e.order for row in matrix for e in row if isinstance(e, QSeries)]
    if orders:
        return QSeries.constant(value, min(orders))
    return Fraction(value)


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation of 0..n-1, by cycle decomposition."""
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _dimension(matrix: Sequence[Sequence], max_dimension: Optional[int]) -> int:
    if max_dimension is None:
        # settings imports core.exceptions, so the lookup stays local
        from ..config.settings import get_settings
        max_dimension = get_settings().max_dimension
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise MatrixError("matrix is not square")
    if n > max_dimension:
        raise DimensionTooLarge(f"dimension {n} exceeds bound {max_dimension}")
    return n


def check_skew(matrix: Sequence[Sequence]) -> None:
    n = len(matrix)
    for i in range(n):
        for j in range(i, n):
            if not is_zero(matrix[i][j] + matrix[j][i]):
                raise NotSkewSymmetric(f"entries ({i}, {j}) and ({j}, {i}) are not opposite")


def border(matrix: Sequence[Sequence]) -> ExactMatrix:
    """Append a column of ones and a row of minus ones (odd to even dimension)."""
    n = len(matrix)
    out = [list(row) + [Fraction(1)] for row in matrix]
    out.append([Fraction(-1)] * n + [Fraction(0)])
    return out


def _pfaffian_definition(matrix: Sequence[Sequence]):
    n = len(matrix)
    half = n // 2
    total = 0
    for perm in permutations(range(n)):
        term = permutation_sign(perm)
        for i in range(half):
            term = term * matrix[perm[2 * i]][perm[2 * i + 1]]
            if is_zero(term):
                break
        total = total + term
    return total * Fraction(1, 2 ** half * factorial(half))


def _pfaffian_expansion(matrix: Sequence[Sequence]):
    n = len(matrix)
    if n % 2:
        matrix = border(matrix)
        n += 1
    memo: Dict[int, object] = {0: 1}

    def expand(mask: int):
        if mask in memo:
            return memo[mask]
        rows = [i for i in range(n) if mask >> i & 1]
        first = rows[0]
        total = 0
        for position in range(1, len(rows)):
            j = rows[position]
            entry = matrix[first][j]
            if is_zero(entry):
                continue
            term = entry * expand(mask & ~(1 << first) & ~(1 << j))
            total = total + term if position % 2 else total - term
        memo[mask] = total
        return total

    return expand((1 << n) - 1)


def pfaffian(matrix: Sequence[Sequence], method: str = 'auto',
             max_dimension: Optional[int] = None):
    """Pfaffian with the normalized permutation-sum convention in odd dimension.

    Args:
        matrix: skew-symmetric square matrix of Fraction or QSeries entries
        method: 'definition', 'expansion', or 'auto' (definition for small
            scalar matrices, memoized first-row expansion otherwise)
        max_dimension: dimension bound, ELLIPSUM_MAX_DIMENSION when omitted

    Returns:
        The pfaffian in the ring of the entries
    """
    n = _dimension(matrix, max_dimension)
    check_skew(matrix)
    if n == 0:
        return Fraction(1)
    if method == 'auto':
        scalar = all(_is_scalar(e) for row in matrix for e in row)
        method = 'definition' if scalar and n <= DEFINITION_LIMIT else 'expansion'
    if method == 'definition':
        value = _pfaffian_definition(matrix)
    elif method == 'expansion':
        value = _pfaffian_expansion(matrix)
    else:
        raise MatrixError(f"unknown pfaffian method {method!r}")
    return _finish(value, matrix)


def _bareiss(matrix: Sequence[Sequence]) -> Fraction:
    n = len(matrix)
    rows = [[Fraction(e) for e in row] for row in matrix]
    sign = 1
    previous = Fraction(1)
    for k in range(n - 1):
        if rows[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if pivot is None:
                return Fraction(0)
            rows[k], rows[pivot] = rows[pivot], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j]) / previous
        previous = rows[k][k]
    return sign * rows[n - 1][n - 1]


def _laplace(matrix: Sequence[Sequence]):
    n = len(matrix)
    memo: Dict[int, object] = {}

    def expand(mask: int):
        row = bin(mask).count('1')
        if row == n:
            return 1
        if mask in memo:
            return memo[mask]
        total = 0
        free_before = 0
        for col in range(n):
            if mask >> col & 1:
                continue
            entry = matrix[row][col]
            if not is_zero(entry):
                term = entry * expand(mask | 1 << col)
                total = total + term if free_before % 2 == 0 else total - term
            free_before += 1
        memo[mask] = total
        return total

    return expand(0)


def determinant(matrix: Sequence[Sequence], max_dimension: Optional[int] = None):
    """Exact determinant: Bareiss over Fraction, memoized Laplace expansion over QSeries."""
    n = _dimension(matrix, max_dimension)
    if n == 0:
        return Fraction(1)
    if all(_is_scalar(e) for row in matrix for e in row):
        return _bareiss(matrix)
    return _finish(_laplace(matrix), matrix)


def hankel_from_moments(moments: Sequence, m: int, offset: int = 0) -> ExactMatrix:
    """The m x m matrix (c[i + j + offset]), 0-based."""
    needed = 2 * m - 2 + offset
    if m > 0 and len(moments) <= needed:
        raise InsufficientMoments(f"need moments up to index {needed}, have {len(moments)}")
    return [[moments[i + j + offset] for j in range(m)] for i in range(m)]


def submatrix(matrix: Sequence[Sequence], rows: Sequence[int], cols: Sequence[int]) -> ExactMatrix:
    return [[matrix[i][j] for j in cols] for i in rows]
