"""Exact core of ellipsum: series, linear algebra, symmetric functions, orthogonal polynomials"""

from .exceptions import EllipsumError, SeriesError, MatrixError, PointError, LabelError
from .series import QSeries, Rat
from .linalg import pfaffian, determinant
from .oracle import rep_counts, count_enum, divisor_count

__all__ = [
    'EllipsumError',
    'SeriesError',
    'MatrixError',
    'PointError',
    'LabelError',
    'QSeries',
    'Rat',
    'pfaffian',
    'determinant',
    'rep_counts',
    'count_enum',
    'divisor_count',
]
