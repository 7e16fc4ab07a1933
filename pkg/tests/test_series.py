"""
Truncated q-series tests
"""

from fractions import Fraction

import pytest

from src.core.exceptions import (
    PoleAtArgument,
    SeriesError,
    TruncationTooSmall,
    ZeroArgument,
    ZeroConstantTerm,
)
from src.core.series import (
    LambertKind,
    PochSpec,
    QSeries,
    SignTwist,
    lambert_sum,
    poch_trunc,
    q_poch,
    series_inverse,
    series_mul,
    theta_logderiv_trunc,
    theta_trunc,
)


def test_multiplication_keeps_order():
    product = series_mul(QSeries([1, 2], 2), QSeries([1, -1], 2))
    assert product.order == 2
    assert product.coeffs == (1, 1, -2)


def test_mixed_orders_take_the_minimum():
    assert (QSeries([1, 1], 3) * QSeries([1, 1], 5)).order == 3


def test_inverse_of_one_minus_u_is_geometric():
    assert series_inverse(QSeries([1, -1], 6)).coeffs == (1,) * 7


def test_inverse_needs_constant_term():
    with pytest.raises(ZeroConstantTerm):
        QSeries([0, 1], 4).inverse()


def test_division_and_power_agree():
    f = QSeries([2, 3, 0, 5], 6)
    assert (f ** 3) / f == f * f
    assert f ** -1 == f.inverse()


def test_euler_product_gives_pentagonal_pattern():
    euler = poch_trunc(PochSpec(Fraction(1), 2, 2), 15)
    assert euler.q_coefficients() == (1, -1, -1, 0, 0, 1, 0, 1)
    assert q_poch(1, 15, offset=1) == euler


def test_poch_at_zero_is_one():
    assert poch_trunc(PochSpec(Fraction(0), 0, 2), 9) == QSeries.one(9)


def test_poch_spec_rejects_bad_step():
    with pytest.raises(SeriesError):
        PochSpec(Fraction(1), 0, 0)


def test_theta_vanishes_at_one():
    assert theta_trunc(1, 11).is_zero()


def test_theta_at_minus_one():
    theta = theta_trunc(-1, 5)
    assert theta.q_coefficients() == (2, 4, 6)
    assert theta.is_even()


def test_theta_at_zero_raises():
    with pytest.raises(ZeroArgument):
        theta_trunc(0, 5)


def test_theta_shift_range():
    with pytest.raises(SeriesError):
        theta_trunc(2, 5, shift=3)


def test_logderiv_pole_at_one():
    with pytest.raises(PoleAtArgument):
        theta_logderiv_trunc(1, 9)


def test_logderiv_low_coefficients():
    series = theta_logderiv_trunc(Fraction(2), 3)
    assert series[0] == Fraction(2)                     # -x/(1 - x)
    assert series[2] == Fraction(-2) + Fraction(1, 2)   # -x q + q/x


@pytest.mark.parametrize('kind, weight, expected', [
    (LambertKind.PLUS, 1, (0, 1, 3, 4)),
    (LambertKind.PLUS_SQUARE, 2, (0, 1, 4, 8)),
    (LambertKind.PLAIN, 0, (0, 1, 2, 2)),
])
def test_lambert_sum_coefficients(kind, weight, expected):
    assert lambert_sum(kind, weight, SignTwist.NONE, 7).q_coefficients() == expected


def test_lambert_alt_kl_twist_is_q_negation():
    plain = lambert_sum('minus', 3, 'none', 41)
    assert lambert_sum('minus', 3, 'alt_kl', 41) == plain.q_negated()


def test_lambert_step_dilates():
    assert lambert_sum('plain', 1, 'none', 41, step=2) == lambert_sum('plain', 1, 'none', 41).dilate(2).truncate(41)


def test_from_q_coefficients_units():
    series = QSeries.from_q_coefficients([1, 2, 3])
    assert series.order == 5
    assert series.q_order == 2
    assert series[4] == 3
    assert series[1] == 0


def test_read_beyond_order_raises():
    with pytest.raises(TruncationTooSmall):
        QSeries([1], 3)[4]


def test_negative_shift_needs_vanishing_head():
    assert QSeries([0, 0, 1], 4).shift(-2).coeffs == (1, 0, 0)
    with pytest.raises(SeriesError):
        QSeries([0, 1], 4).shift(-2)


def test_q_negation_needs_integral_powers():
    with pytest.raises(SeriesError):
        QSeries([0, 1], 3).q_negated()


def test_first_mismatch():
    a = QSeries([1, 2, 3], 4)
    assert a.first_mismatch(QSeries([1, 2, 4], 4)) == 2
    assert a.first_mismatch(a) is None
