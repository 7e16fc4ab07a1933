"""
Schur-type function tests
"""

from fractions import Fraction

import pytest

from src.core.exceptions import (
    AntipodalPoints,
    LabelNotStrict,
    LabelTooLong,
    NotStrictlyDecreasing,
    RepeatedPoint,
    TooManyVariables,
    ZeroPointWithNegativeExponent,
)
from src.core.symfun import (
    balanced_label,
    q_at_ones,
    q_balanced_at_ones,
    q_lambda_eval,
    q_lambda_limit_at_ones,
    q_lambda_pdef,
    s_at_ones,
    s_mu_eval,
    schur_eval,
    vandermonde,
)

F = Fraction


def test_bialternant_examples():
    assert s_mu_eval((2, 0), (3, 1)) == 4
    assert s_mu_eval((1, 0), (F(5), F(7, 2))) == 1


def test_bialternant_shift_law():
    xs = (F(2), F(3), F(1, 2))
    mu = (4, 1, -2)
    shifted = tuple(e + 3 for e in mu)
    assert s_mu_eval(shifted, xs) == s_mu_eval(mu, xs) * (xs[0] * xs[1] * xs[2]) ** 3


@pytest.mark.parametrize('mu, m, expected', [
    ((2, 0), 2, 2),
    ((0,), 1, 1),
    ((2, 1, -1, -2), 4, 6),
    ((3, 1, 0), 3, 3),
])
def test_bialternant_at_ones(mu, m, expected):
    assert s_at_ones(mu, m) == expected


def test_at_ones_is_the_limit_of_the_bialternant():
    delta = F(1, 10 ** 6)
    near_ones = (1 + delta, 1 + 2 * delta, 1 + 3 * delta)
    assert abs(s_mu_eval((3, 1, 0), near_ones) - s_at_ones((3, 1, 0))) < F(1, 1000)


def test_errors():
    with pytest.raises(NotStrictlyDecreasing):
        s_at_ones((1, 2))
    with pytest.raises(RepeatedPoint):
        s_mu_eval((1, 0), (2, 2))
    with pytest.raises(ZeroPointWithNegativeExponent):
        s_mu_eval((0, -1), (0, 1))
    with pytest.raises(LabelTooLong):
        s_mu_eval((2, 1, 0), (1, 2))


def test_schur_polynomials():
    assert schur_eval((1, 1), (1, 2, 3)) == 11
    assert schur_eval((2,), (1, 1)) == 3
    assert schur_eval((), (5, 7)) == 1
    assert schur_eval((1, 1, 1), (1, 2)) == 0


def test_schur_repeated_points_use_jacobi_trudi():
    # h_2 h_1 - h_3 at (1, 1, 1): 6 * 3 - 10
    assert schur_eval((2, 1), (1, 1, 1)) == 8
    assert schur_eval((2, 1), (1, 2, 3)) == 60


def test_vandermonde():
    assert vandermonde((1, 2, 4)) == (2 - 1) * (4 - 1) * (4 - 2)


def test_balanced_label():
    assert balanced_label((3, 1)) == (3, 1, -1, -3)


def test_schur_q_two_routes_agree():
    xs = (F(2), F(3), F(5, 2), F(7))
    for label in [(1, -1), (2, 1), (3,), (-2,)]:
        assert q_lambda_eval(label, xs) == q_lambda_pdef(label, xs)


def test_balanced_at_ones_small_case():
    assert q_balanced_at_ones((1,), 1) == 16
    assert q_balanced_at_ones((), 3) == 1


def test_balanced_at_ones_matches_limit():
    assert q_lambda_limit_at_ones((1, -1), 2) == 16
    assert q_balanced_at_ones((2,), 2, 'odd') == q_lambda_limit_at_ones(balanced_label((2,)), 5)


def test_general_labels_at_ones_match_limit():
    for label, n in [((1, -1), 2), ((3, -1), 3), ((1,), 2), ((3, 1, -2), 3)]:
        assert q_at_ones(label, n) == q_lambda_limit_at_ones(label, n)


def test_schur_q_errors():
    with pytest.raises(AntipodalPoints):
        q_lambda_eval((1,), (1, -1))
    with pytest.raises(TooManyVariables):
        q_lambda_eval((1,), tuple(range(1, 10)))
    with pytest.raises(LabelNotStrict):
        q_balanced_at_ones((1, 2), 2)
