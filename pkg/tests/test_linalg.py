"""
Exact linear algebra tests
"""

from fractions import Fraction

import pytest

from src.core.exceptions import DimensionTooLarge, InsufficientMoments, MatrixError, NotSkewSymmetric
from src.core.linalg import (
    border,
    determinant,
    hankel_from_moments,
    permutation_sign,
    pfaffian,
)
from src.core.orthopoly import moments
from src.core.series import QSeries

F = Fraction


def skew(upper):
    """Skew-symmetric matrix from {(i, j): a_ij} with i < j."""
    n = max(j for _, j in upper) + 1
    matrix = [[F(0)] * n for _ in range(n)]
    for (i, j), value in upper.items():
        matrix[i][j] = F(value)
        matrix[j][i] = -F(value)
    return matrix


def test_pfaffian_of_two_by_two():
    assert pfaffian(skew({(0, 1): 7})) == 7


@pytest.mark.parametrize('method', ['definition', 'expansion', 'auto'])
def test_pfaffian_of_four_by_four(method):
    a = {(0, 1): 2, (0, 2): 3, (0, 3): 5, (1, 2): 7, (1, 3): 11, (2, 3): 13}
    expected = 2 * 13 - 3 * 11 + 5 * 7
    assert pfaffian(skew(a), method=method) == expected


def test_odd_pfaffian_schur_example():
    xs = [F(1), F(2), F(0)]
    matrix = [[(a - b) / (a + b) if a != b else F(0) for b in xs] for a in xs]
    assert pfaffian(matrix, method='definition') == F(-1, 3)
    assert pfaffian(matrix, method='expansion') == F(-1, 3)


def test_bordering_shape():
    bordered = border(skew({(0, 1): 1, (0, 2): 2, (1, 2): 3}))
    assert len(bordered) == 4
    assert bordered[3] == [-1, -1, -1, 0]


def test_pfaffian_over_series():
    u = QSeries([0, 1], 5)
    one = QSeries.one(5)
    zero = QSeries.zero(5)
    matrix = [[zero, one + u], [-(one + u), zero]]
    assert pfaffian(matrix) == one + u


def test_pfaffian_rejects_non_skew():
    with pytest.raises(NotSkewSymmetric):
        pfaffian([[F(0), F(1)], [F(1), F(0)]])


def test_pfaffian_unknown_method():
    with pytest.raises(MatrixError):
        pfaffian(skew({(0, 1): 1}), method='magic')


def test_empty_matrix():
    assert pfaffian([]) == 1
    assert determinant([]) == 1


def test_dimension_bound():
    identity = [[F(int(i == j)) for j in range(3)] for i in range(3)]
    with pytest.raises(DimensionTooLarge):
        determinant(identity, max_dimension=2)


def test_dimension_bound_from_environment(clean_env):
    clean_env.setenv('ELLIPSUM_MAX_DIMENSION', '3')
    identity = [[F(int(i == j)) for j in range(4)] for i in range(4)]
    with pytest.raises(DimensionTooLarge):
        determinant(identity)
    with pytest.raises(DimensionTooLarge):
        pfaffian(skew({(0, 1): 1, (2, 3): 1}))
    assert determinant(identity, max_dimension=4) == 1
    assert determinant([row[:3] for row in identity[:3]]) == 1


def test_default_dimension_bound(clean_env):
    assert determinant([[F(int(i == j)) for j in range(10)] for i in range(10)]) == 1
    with pytest.raises(DimensionTooLarge):
        determinant([[F(int(i == j)) for j in range(11)] for i in range(11)])


def test_determinant_over_series():
    u = QSeries([0, 1], 4)
    one = QSeries.one(4)
    assert determinant([[one + u, u], [u, one]]) == QSeries([1, 1, -1], 4)


def test_bareiss_with_row_swap():
    assert determinant([[F(0), F(2)], [F(3), F(4)]]) == -6
    assert determinant([[F(1), F(2)], [F(2), F(4)]]) == 0


@pytest.mark.parametrize('perm, sign', [
    ((0, 1, 2), 1),
    ((1, 0, 2), -1),
    ((1, 2, 0), 1),
    ((3, 2, 1, 0), 1),
])
def test_permutation_sign(perm, sign):
    assert permutation_sign(perm) == sign


def test_hankel_from_tangent_moments():
    tangent = moments('tangent', 4)
    assert hankel_from_moments(tangent.values, 1) == [[F(1, 2)]]
    assert hankel_from_moments(moments('mu0', 2).values, 2) == [[F(1, 2), F(1, 4)], [F(1, 4), F(1, 2)]]
    assert hankel_from_moments(tangent.values, 0) == []


def test_hankel_needs_enough_moments():
    with pytest.raises(InsufficientMoments):
        hankel_from_moments([F(1), F(2)], 2)
