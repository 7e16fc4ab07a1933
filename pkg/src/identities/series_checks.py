"""
Series Identity Checks
Both sides of each q-series identity built independently and compared coefficient by coefficient
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from ..core.exceptions import InvalidParams, InvalidPoints
from ..core.linalg import determinant, hankel_from_moments, pfaffian
from ..core.oracle import RepKind, base_series, rep_series
from ..core.orthopoly import MomentId, correlation_eval, moments, norms_product, q_dual_hahn_ops, q_norm_closed_form
from ..core.series import (
    LambertKind,
    PochSpec,
    QSeries,
    SignTwist,
    lambert_sum,
    poch_trunc,
    q_poch,
    theta_logderiv_trunc,
    theta_trunc,
)
from ..core.symfun import q_balanced_at_ones, q_lambda_eval, s_mu_eval
from .counts import milne_prefactor, milne_sum
from .enumeration import SlotBlock, enumerate_weighted, sign_minus, sign_plus
from .reports import VerifyReport, format_rat, merge, series_report

logger = logging.getLogger(__name__)

Points = Sequence[Fraction]

DEFAULT_THETA_POINTS = (Fraction(2), Fraction(3), Fraction(-2), Fraction(1, 2))


def u_order(order: int) -> int:
    """u-order that carries a q-series through q^order."""
    return 2 * order + 1


def _squares(order: int) -> QSeries:
    return base_series(RepKind.SQUARES, order)


def _triangles(order: int) -> QSeries:
    return base_series(RepKind.TRIANGLES, order)


def _point_params(points: Points) -> List[str]:
    return [format_rat(x) for x in points]


def check_points(points: Points, antipodal: bool = True) -> List[Fraction]:
    """Rational points that are nonzero, pairwise distinct and, if asked, not antipodal."""
    points = [Fraction(x) for x in points]
    if any(x == 0 for x in points):
        raise InvalidPoints("points must be nonzero")
    if len(set(points)) != len(points):
        raise InvalidPoints("points must be pairwise distinct")
    if antipodal:
        for a, b in combinations(points, 2):
            if a + b == 0:
                raise InvalidPoints(f"points {a} and {-a} are antipodal")
    return points


# Theta function level

def _bilateral_sum(x: Fraction, order: int, weighted: bool = False) -> QSeries:
    """sum_k (-1)^k k^w q^(k(k-1)/2) x^k over all integers k, w = 1 if weighted else 0."""
    terms: Dict[int, Fraction] = {}
    for j in range(-order - 1, order + 2):
        if j * (j - 1) // 2 <= order:
            value = (-1) ** (j % 2) * x ** j * (j if weighted else 1)
            terms[j * (j - 1)] = terms.get(j * (j - 1), 0) + value
    return QSeries.from_dict(terms, u_order(order))


def verify_jtp(order: int, points: Points = DEFAULT_THETA_POINTS) -> VerifyReport:
    """(q)_inf theta(x) against the bilateral sum of (-1)^k q^(k(k-1)/2) x^k."""
    U = u_order(order)
    euler = q_poch(1, U, base=1, offset=1)
    reports = []
    for x in check_points(points, antipodal=False):
        lhs = euler * theta_trunc(x, U)
        rhs = _bilateral_sum(x, order)
        reports.append(series_report('jtp', {'order': order, 'x': format_rat(x)}, lhs, rhs, order))
    return merge('jtp', {'order': order, 'points': _point_params(points)}, reports)


def verify_qp(order: int, points: Points = DEFAULT_THETA_POINTS) -> VerifyReport:
    """theta(1/x) = theta(qx) = -theta(x)/x."""
    U = u_order(order)
    reports = []
    for x in check_points(points, antipodal=False):
        target = theta_trunc(x, U) * (-1 / x)
        params = {'order': order, 'x': format_rat(x)}
        reports.append(series_report('qp', params, theta_trunc(x, U, shift=2), target, order))
        reports.append(series_report('qp', params, theta_trunc(1 / x, U), target, order))
    return merge('qp', {'order': order, 'points': _point_params(points)}, reports)


def verify_rp(order: int, a: Fraction = Fraction(2), x: Fraction = Fraction(3)) -> VerifyReport:
    """(q)^2 theta(ax) / (theta(a) theta(x)) = sum_k x^k / (1 - a q^k) with the constant tails summed."""
    a, x = Fraction(a), Fraction(x)
    if a in (0, 1) or x in (0, 1):
        raise InvalidPoints("the kernel needs a, x outside {0, 1}")
    U = u_order(order)
    euler = q_poch(1, U, base=1, offset=1)
    lhs = euler * euler * theta_trunc(a * x, U) / (theta_trunc(a, U) * theta_trunc(x, U))
    terms = {0: 1 / (1 - a) + x / (1 - x)}
    for d in range(1, order + 1):
        for l in range(1, order // d + 1):
            terms[2 * d * l] = terms.get(2 * d * l, 0) + x ** d * a ** l - x ** (-d) * a ** (-l)
    rhs = QSeries.from_dict(terms, U)
    return series_report('rp', {'a': format_rat(a), 'order': order, 'x': format_rat(x)}, lhs, rhs, order)


def _triple_product_logderiv(x: Fraction, order: int) -> QSeries:
    return _bilateral_sum(x, order, weighted=True) / _bilateral_sum(x, order)


def verify_ol(order: int, points: Points = (Fraction(2), Fraction(3), Fraction(-2))) -> VerifyReport:
    """x theta'(x) / theta(x) = -sum_(k != 0) x^k / (1 - q^k)."""
    U = u_order(order)
    reports = []
    for x in check_points(points, antipodal=False):
        if x == 1:
            raise InvalidPoints("theta vanishes at 1")
        terms = {0: -x / (1 - x)}
        for d in range(1, order + 1):
            for l in range(1, order // d + 1):
                terms[2 * d * l] = terms.get(2 * d * l, 0) - x ** d + x ** (-d)
        rhs = QSeries.from_dict(terms, U)
        params = {'order': order, 'x': format_rat(x)}
        reports.append(series_report('ol', params, theta_logderiv_trunc(x, U), rhs, order))
        reports.append(series_report('ol', params, _triple_product_logderiv(x, order), rhs, order))
    return merge('ol', {'order': order, 'points': _point_params(points)}, reports)


def verify_sp(order: int) -> VerifyReport:
    """Product forms of the squares and triangles series against their sum forms."""
    U = u_order(order)
    params = {'order': order}
    ratio = q_poch(1, U, base=1, offset=1).q_negated() / q_poch(-1, U, base=1, offset=1).q_negated()
    return merge('sp', params, [
        series_report('sp', params, base_series(RepKind.SQUARES, order, form='product'), _squares(order), order),
        series_report('sp', params, base_series(RepKind.TRIANGLES, order, form='product'), _triangles(order), order),
        series_report('sp', params, ratio, _squares(order), order),
    ])


# Lambert forms and Jacobi's identities

def verify_l2(order: int) -> VerifyReport:
    U = u_order(order)
    rhs = 1 + 4 * lambert_sum(LambertKind.PLUS_SQUARE, 0, SignTwist.NONE, U)
    return series_report('l2', {'order': order}, rep_series(RepKind.SQUARES, 2, order), rhs, order)


def verify_l4(order: int) -> VerifyReport:
    U = u_order(order)
    rhs = 1 + 8 * lambert_sum(LambertKind.PLUS, 1, SignTwist.NONE, U)
    return series_report('l4', {'order': order}, rep_series(RepKind.SQUARES, 4, order), rhs, order)


def verify_l8(order: int) -> VerifyReport:
    U = u_order(order)
    rhs = 1 + 16 * lambert_sum(LambertKind.MINUS, 3, SignTwist.NONE, U)
    return series_report('l8', {'order': order}, rep_series(RepKind.SQUARES, 8, order), rhs, order)


def _q_triangles_squared(order: int) -> QSeries:
    """q triangle(q^2)^4."""
    return (_triangles(order).dilate(2) ** 4).shift(2).truncate(u_order(order))


def verify_jl(order: int) -> VerifyReport:
    U = u_order(order)
    lhs = _q_triangles_squared(order) * rep_series(RepKind.SQUARES, 2, order)
    rhs = lambert_sum(LambertKind.PLUS_SQUARE, 2, SignTwist.NONE, U)
    return series_report('jl', {'order': order}, lhs, rhs, order)


def verify_jq(order: int) -> VerifyReport:
    fourth = rep_series(RepKind.SQUARES, 4, order)
    lhs = 16 * _q_triangles_squared(order)
    return series_report('jq', {'order': order}, lhs, fourth - fourth.q_negated(), order)


def _squares_at_minus_q_squared(order: int) -> QSeries:
    """square(-q^2)."""
    return _squares(order).q_negated().dilate(2).truncate(u_order(order))


def verify_sq_split(order: int) -> VerifyReport:
    square = _squares(order)
    lhs = _squares_at_minus_q_squared(order) ** 2
    return series_report('sq_split', {'order': order}, lhs, square * square.q_negated(), order)


def verify_jacobi8(order: int) -> VerifyReport:
    """square(q)^8 = square(-q^2)^8 + 16 q triangle(q^2)^4 square(q)^4."""
    rhs = (_squares_at_minus_q_squared(order) ** 8
           + 16 * _q_triangles_squared(order) * rep_series(RepKind.SQUARES, 4, order))
    return series_report('jacobi8', {'order': order}, rep_series(RepKind.SQUARES, 8, order), rhs, order)


def verify_hsf8_series(order: int) -> VerifyReport:
    """Lambert generating form of the eight squares case of the 2m^2 formula."""
    U = u_order(order)
    alternating = lambert_sum(LambertKind.PLAIN_PLUS, 1, SignTwist.ALT_K, U, step=2)
    weighted = lambert_sum(LambertKind.PLUS_SQUARE, 2, SignTwist.NONE, U)
    plain = lambert_sum(LambertKind.PLUS_SQUARE, 0, SignTwist.NONE, U)
    rhs = 1 + 16 * alternating + 16 * weighted + 64 * alternating * alternating + 64 * weighted * plain
    return series_report('hsf8_series', {'order': order}, rep_series(RepKind.SQUARES, 8, order), rhs, order)


# Hankel, norm and correlation forms of the 4m^2 and 4m(m+1) squares identities

def _summands(eps: int, m: int) -> int:
    return 4 * m * m if eps == 0 else 4 * m * (m + 1)


def _tag(base: str, eps: int) -> str:
    return f"{base}_{'sq' if eps == 0 else 'oct'}"


def verify_mhd(eps: int, m: int, order: int) -> VerifyReport:
    """Hankel determinant of the nu moments against the squares power."""
    U = u_order(order)
    nu = moments(MomentId.NU0 if eps == 0 else MomentId.NU1, 2 * m - 2, U)
    rhs = determinant(hankel_from_moments(nu.values, m)) * milne_prefactor(eps, m)
    lhs = rep_series(RepKind.SQUARES, _summands(eps, m), order)
    return series_report(_tag('mhd', eps), {'m': m, 'order': order}, lhs, rhs, order)


def verify_opc(eps: int, m: int, order: int) -> VerifyReport:
    """Product of the q-deformed norms against the squares power."""
    rhs = norms_product(eps, m, order=u_order(order)) * milne_prefactor(eps, m)
    lhs = rep_series(RepKind.SQUARES, _summands(eps, m), order)
    return series_report('opc', {'eps': eps, 'm': m, 'order': order}, lhs, rhs, order)


def verify_pqn(eps: int, k: int, order: int) -> VerifyReport:
    """Each norm ||p_j(x; q)||^2, j <= k, as a power of the squares series."""
    U = u_order(order)
    ops = q_dual_hahn_ops(eps, k, U)
    square = _squares(order)
    params = {'eps': eps, 'k': k, 'order': order}
    return merge('pqn', params, [
        series_report('pqn', {'eps': eps, 'k': j, 'order': order},
                      ops.norm(j), q_norm_closed_form(eps, j, square), order)
        for j in range(k + 1)
    ])


def _weighted_series(eps: int, m: int, order: int, coupling) -> QSeries:
    sign = sign_plus if eps == 0 else sign_minus
    total = [Fraction(0)] * (order + 1)
    for s in range(m + 1):
        weights = enumerate_weighted([SlotBlock(s, sign=sign)], coupling, order)
        total = [a + b for a, b in zip(total, weights)]
    return QSeries.from_q_coefficients(total, order)


def verify_gcc(eps: int, m: int, order: int) -> VerifyReport:
    """Correlation form with the Christoffel-Darboux route."""
    def inner(ks):
        return correlation_eval(eps, len(ks), m, [Fraction(-k * k) for k in ks], route='cd')

    rhs = QSeries.from_q_coefficients(milne_sum(eps, m, order, inner), order)
    lhs = rep_series(RepKind.SQUARES, _summands(eps, m), order)
    return series_report(_tag('gcc', eps), {'m': m, 'order': order}, lhs, rhs, order)


def verify_qss(eps: int, m: int, order: int) -> VerifyReport:
    """Schur Q form at all variables equal to one."""
    parity = 'even' if eps == 0 else 'odd'

    def coupling(ks):
        chosen = ks[0]
        s = len(chosen)
        sign = (-1) ** s if eps else 1
        return Fraction(sign, 2 ** s) * q_balanced_at_ones(chosen, m, parity)

    rhs = _weighted_series(eps, m, order, coupling)
    lhs = rep_series(RepKind.SQUARES, _summands(eps, m), order)
    return series_report(_tag('qss', eps), {'m': m, 'order': order}, lhs, rhs, order)


# Elliptic pfaffian evaluations

def _zero(U: int) -> QSeries:
    return QSeries.zero(U)


def _theta_quotient(r: Fraction, U: int) -> QSeries:
    """theta(r) / theta(-r)."""
    return theta_trunc(r, U) / theta_trunc(-r, U)


def verify_eep(points: Points, order: int) -> VerifyReport:
    points = check_points(points)
    n = len(points)
    if n % 2:
        raise InvalidParams("the even pfaffian needs an even number of points", param='points')
    U = u_order(order)
    matrix = [[_zero(U) if i == j else _theta_quotient(points[j] / points[i], U) for j in range(n)]
              for i in range(n)]
    rhs = QSeries.one(U)
    for i, j in combinations(range(n), 2):
        rhs = rhs * _theta_quotient(points[j] / points[i], U)
    return series_report('eep', {'order': order, 'points': _point_params(points)}, pfaffian(matrix), rhs, order)


def verify_oep(points: Points, order: int) -> VerifyReport:
    points = check_points(points)
    n = len(points)
    if n % 2 == 0:
        raise InvalidParams("the odd pfaffian needs an odd number of points", param='points')
    m = n // 2
    U = u_order(order)

    def entry(i: int, j: int) -> QSeries:
        if i == j:
            return _zero(U)
        return 1 - 2 * theta_logderiv_trunc(-points[j] / points[i], U)

    matrix = [[entry(i, j) for j in range(n)] for i in range(n)]
    ratio = q_poch(1, U, base=1, offset=1) / q_poch(-1, U, base=1, offset=1)
    rhs = ratio ** (2 * m)
    for i, j in combinations(range(n), 2):
        rhs = rhs * _theta_quotient(points[j] / points[i], U)
    return series_report('oep', {'order': order, 'points': _point_params(points)}, pfaffian(matrix), rhs, order)


def _half_theta_product(points: Points, U: int) -> QSeries:
    """prod_(i<j) theta(x_j/x_i) / theta(sqrt(q) x_j/x_i)."""
    value = QSeries.one(U)
    for i, j in combinations(range(len(points)), 2):
        r = points[j] / points[i]
        value = value * theta_trunc(r, U) / theta_trunc(r, U, shift=1)
    return value


def _half_euler_ratio(m: int, U: int) -> QSeries:
    """(q)_inf^(2m) / (sqrt(q); q)_inf^(2m)."""
    ratio = q_poch(1, U, base=1, offset=1) / poch_trunc(PochSpec(Fraction(1), 1, 2), U)
    return ratio ** (2 * m)


def verify_ep(points: Points, order: int) -> VerifyReport:
    """Even pfaffian with half-period shifted theta entries; order is a u-order."""
    points = check_points(points)
    n = len(points)
    if n % 2:
        raise InvalidParams("the even pfaffian needs an even number of points", param='points')
    m = n // 2
    U = order

    def entry(i: int, j: int) -> QSeries:
        if i == j:
            return _zero(U)
        r = points[j] / points[i]
        return theta_trunc(r, U) / (theta_trunc(r, U, shift=1) * points[j])

    matrix = [[entry(i, j) for j in range(n)] for i in range(n)]
    scale = Fraction(1)
    for i, x in enumerate(points, start=1):
        scale *= x ** (m - i)
    rhs = (_half_theta_product(points, U) * scale).shift(m * (m - 1) // 2).truncate(U)
    return series_report('ep', {'order': order, 'points': _point_params(points)},
                         pfaffian(matrix), rhs, order, unit='u')


def verify_op(points: Points, order: int) -> VerifyReport:
    """Odd pfaffian of theta log-derivatives at sqrt(q) x_i/x_j; order is a u-order."""
    points = check_points(points)
    n = len(points)
    if n % 2 == 0:
        raise InvalidParams("the odd pfaffian needs an odd number of points", param='points')
    m = n // 2
    U = order

    def entry(i: int, j: int) -> QSeries:
        if i == j:
            return _zero(U)
        return theta_logderiv_trunc(points[i] / points[j], U + 1, shift=1).shift(-1)

    matrix = [[entry(i, j) for j in range(n)] for i in range(n)]
    scale = Fraction(1)
    for i, x in enumerate(points, start=1):
        scale *= x ** (m + 1 - i)
    rhs = _half_euler_ratio(m, U) * _half_theta_product(points, U) * scale
    rhs = rhs.shift(m * (m - 1) // 2).truncate(U)
    return series_report('op', {'order': order, 'points': _point_params(points)},
                         pfaffian(matrix), rhs, order, unit='u')


def _pair_product(points: Points, U: int, shifted: int, negate: bool) -> QSeries:
    """prod_(i<j) (q r, q/r; q) / (c r, c/r; q), c = sqrt(q) or -q, r = x_j/x_i."""
    value = QSeries.one(U)
    for i, j in combinations(range(len(points)), 2):
        r = points[j] / points[i]
        sign = -1 if negate else 1
        for y in (r, 1 / r):
            value = value * poch_trunc(PochSpec(y, 2, 2), U) / poch_trunc(PochSpec(sign * y, shifted, 2), U)
    return value


def _decreasing_tuples(m: int, smallest: int, budget: int):
    """k_1 > ... > k_m >= smallest with sum k_i <= budget."""
    def walk(prefix: Tuple[int, ...], remaining: int, upper: int):
        if len(prefix) == m:
            yield prefix
            return
        left = m - len(prefix) - 1
        floor = smallest + left
        for k in range(floor, upper + 1):
            rest = remaining - k
            tail = sum(smallest + t for t in range(left))
            if rest < tail:
                break
            yield from walk(prefix + (k,), rest, k - 1)

    yield from walk((), budget, budget)


def verify_dfe(points: Points, order: int) -> VerifyReport:
    """Multivariable Lambert expansions of the half-shifted pfaffians; order is a u-order.

    An even number 2m of points gives the expansion over k_1 > ... > k_m >= 0, an odd
    number 2m + 1 the one over k_1 > ... > k_m >= 1.
    """
    points = check_points(points)
    n = len(points)
    m = n // 2
    odd = n % 2 == 1
    tag = 'dfe_odd' if odd else 'dfe_even'
    U = order

    lhs = _half_euler_ratio(m, U) * _pair_product(points, U, shifted=1, negate=False)
    scale = Fraction(1)
    for x in points:
        scale /= x ** m
    lhs = (lhs * scale).shift(m * (m + 1) // 2 if odd else m * (m - 1) // 2).truncate(U)

    rhs = _zero(U)
    for ks in _decreasing_tuples(m, 1 if odd else 0, U):
        if odd:
            label = list(ks) + [0] + [-k for k in reversed(ks)]
        else:
            label = list(ks) + [-k - 1 for k in reversed(ks)]
        value = s_mu_eval(label, points)
        if not value:
            continue
        term = QSeries.constant(value, U)
        for k in ks:
            period = 2 * k if odd else 2 * k + 1
            geometric = {k + period * l: 1 for l in range(U // period + 1)}
            term = term * QSeries.from_dict(geometric, U)
        rhs = rhs + term
    return series_report(tag, {'order': order, 'points': _point_params(points)}, lhs, rhs, order, unit='u')


def verify_mdt(points: Points, order: int) -> VerifyReport:
    """Schur Q expansion of the pfaffians with -q shifted theta entries."""
    points = check_points(points)
    n = len(points)
    m = n // 2
    odd = n % 2 == 1
    tag = 'mdt_odd' if odd else 'mdt_even'
    U = u_order(order)

    ratio = q_poch(1, U, base=1, offset=1) / q_poch(-1, U, base=1, offset=1)
    lhs = ratio ** (2 * m) * _pair_product(points, U, shifted=2, negate=True)

    rhs = QSeries.one(U)
    for s in range(1, m + 1):
        for ks in _decreasing_tuples(s, 1, order):
            label = list(ks) + [-k for k in reversed(ks)]
            value = q_lambda_eval(label, points) / 2 ** s
            if odd and s % 2:
                value = -value
            term = QSeries.constant(value, U)
            for k in ks:
                # (-q)^k / (1 +- q^k)
                atom = {}
                for l in range(1, order // k + 1):
                    sign = (-1) ** k * ((-1) ** (l - 1) if not odd else 1)
                    atom[2 * k * l] = sign
                term = term * QSeries.from_dict(atom, U)
            rhs = rhs + term
    return series_report(tag, {'order': order, 'points': _point_params(points)}, lhs, rhs, order)
