"""
Orthogonal Polynomials and Correlation Functions
Tangent numbers, moment functionals, monic orthogonal polynomials from moments,
Schur-type determinant polynomials and correlation functions by several routes
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .exceptions import (
    InsufficientMoments,
    RepeatedPoint,
    RouteUnavailable,
    SingularHankel,
    UnknownId,
    ZeroConstantTerm,
)
from .linalg import determinant, hankel_from_moments, is_zero
from .series import LambertKind, QSeries, SignTwist, lambert_sum, lambert_term_sign
from .symfun import schur_eval, vandermonde

logger = logging.getLogger(__name__)

Ring = Union[Fraction, QSeries]
Poly = Tuple[Ring, ...]

CORRELATION_ROUTES = ('cd', 'sumsq', 'schur', 'wronskian')


# Bernoulli and tangent numbers

def bernoulli(K: int) -> List[Fraction]:
    """B_0, ..., B_K with B_1 = -1/2."""
    values = [Fraction(1)]
    for m in range(1, K + 1):
        acc = sum(comb(m + 1, j) * values[j] for j in range(m))
        values.append(-acc / (m + 1))
    return values


def tangent_numbers(K: int) -> List[Fraction]:
    """[0, t_1, ..., t_K] with tan(x/2) = sum t_k x^(2k-1) / (2k-1)!."""
    b = bernoulli(2 * K)
    return [Fraction(0)] + [(4 ** k - 1) * abs(b[2 * k]) / k for k in range(1, K + 1)]


def tangent_numbers_by_series(K: int) -> List[Fraction]:
    """Same table as tangent_numbers, from the quotient sin(x/2) / cos(x/2)."""
    order = 2 * K
    sine = [Fraction(0)] * (order + 1)
    cosine = [Fraction(0)] * (order + 1)
    for j in range(order + 1):
        term = Fraction(1, 2 ** j * factorial(j))
        if j % 2:
            sine[j] = term if (j // 2) % 2 == 0 else -term
        else:
            cosine[j] = term if (j // 2) % 2 == 0 else -term
    tan_half = QSeries(sine, order) / QSeries(cosine, order)
    return [Fraction(0)] + [tan_half[2 * k - 1] * factorial(2 * k - 1) for k in range(1, K + 1)]


# Moment functionals

class MomentId(str, Enum):
    MU0 = 'mu0'
    MU1 = 'mu1'
    NU0 = 'nu0'
    NU1 = 'nu1'
    LAMBDA0 = 'lambda0'
    LAMBDA1 = 'lambda1'
    TANGENT = 'tangent'
    MEIXNER_POLLACZEK = 'mp'


@dataclass(frozen=True)
class MomentSeq:
    """Moments c_0, ..., c_upto of a functional; values are Fractions or QSeries."""

    id: MomentId
    values: Tuple[Ring, ...]
    order: Optional[int] = None

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int) -> Ring:
        if index >= len(self.values):
            raise InsufficientMoments(f"moment {index} of {self.id.value} not computed")
        return self.values[index]


def _lambda_moment(eps: int, a: int, order: int) -> QSeries:
    if eps == 0:
        series = lambert_sum(LambertKind.PLUS, 2 * a + 1, SignTwist.NONE, order)
    else:
        series = lambert_sum(LambertKind.MINUS, 2 * a + 3, SignTwist.NONE, order)
    return series * (4 * (-1) ** a)


def moments(moment_id: Union[MomentId, str], upto: int, order: Optional[int] = None) -> MomentSeq:
    """Moments of mu_eps, lambda_eps, nu_eps = mu_eps + lambda_eps or the related functionals.

    Args:
        moment_id: which functional
        upto: last moment index
        order: u-order for the q-dependent functionals

    Returns:
        MomentSeq with upto + 1 entries
    """
    try:
        moment_id = MomentId(moment_id)
    except ValueError:
        raise UnknownId(f"unknown moment functional {moment_id!r}")

    t = tangent_numbers(upto + 2)
    if moment_id in (MomentId.MU0, MomentId.TANGENT):
        return MomentSeq(moment_id, tuple(t[a + 1] for a in range(upto + 1)))
    if moment_id is MomentId.MU1:
        return MomentSeq(moment_id, tuple(t[a + 2] for a in range(upto + 1)))
    if moment_id is MomentId.MEIXNER_POLLACZEK:
        values = tuple(4 * t[a // 2 + 1] if a % 2 == 0 else Fraction(0) for a in range(upto + 1))
        return MomentSeq(moment_id, values)

    if order is None:
        raise UnknownId(f"functional {moment_id.value} needs a truncation order")
    eps = 0 if moment_id in (MomentId.NU0, MomentId.LAMBDA0) else 1
    lam = [_lambda_moment(eps, a, order) for a in range(upto + 1)]
    if moment_id in (MomentId.LAMBDA0, MomentId.LAMBDA1):
        return MomentSeq(moment_id, tuple(lam), order)
    mu = t[1 + eps:]
    return MomentSeq(moment_id, tuple(lam[a] + mu[a] for a in range(upto + 1)), order)


# Monic orthogonal polynomials

@dataclass(frozen=True)
class MonicOPSeq:
    """p_0, ..., p_K as coefficient tuples (lowest degree first) with squared norms."""

    polys: Tuple[Poly, ...]
    norms: Tuple[Ring, ...]

    def __len__(self) -> int:
        return len(self.polys)

    def coefficients(self, k: int) -> Poly:
        return self.polys[k]

    def norm(self, k: int) -> Ring:
        return self.norms[k]

    def evaluate(self, k: int, x) -> Ring:
        return poly_eval(self.polys[k], x)

    def derivative_eval(self, k: int, x) -> Ring:
        return poly_taylor(self.polys[k], x, 1)


def poly_eval(poly: Sequence, x) -> Ring:
    value = Fraction(0)
    for c in reversed(poly):
        value = value * x + c
    return value


def poly_taylor(poly: Sequence, x, d: int) -> Ring:
    """f^(d)(x) / d! for the polynomial with the given coefficients."""
    value = Fraction(0)
    for a in range(len(poly) - 1, d - 1, -1):
        value = value * x + poly[a] * comb(a, d)
    return value


def _inner(f: Sequence, g: Sequence, c: MomentSeq) -> Ring:
    total = Fraction(0)
    for a, fa in enumerate(f):
        if is_zero(fa):
            continue
        for b, gb in enumerate(g):
            if not is_zero(gb):
                total = total + fa * gb * c[a + b]
    return total


def _divide(a: Ring, b: Ring) -> Ring:
    if is_zero(b):
        raise SingularHankel("vanishing Hankel determinant ratio")
    try:
        return a / b
    except ZeroConstantTerm:
        raise SingularHankel("norm series is not invertible")


def monic_ops(c: MomentSeq, K: int) -> MonicOPSeq:
    """Gram-Schmidt on 1, x, ..., x^K under the functional with moments c."""
    if len(c) < 2 * K + 1:
        raise InsufficientMoments(f"need {2 * K + 1} moments, have {len(c)}")
    polys: List[List[Ring]] = []
    norms: List[Ring] = []
    for k in range(K + 1):
        p: List[Ring] = [Fraction(0)] * k + [Fraction(1)]
        monomial = list(p)
        for j in range(k):
            projection = _inner(monomial, polys[j], c)
            if is_zero(projection):
                continue
            coef = _divide(projection, norms[j])
            for a, value in enumerate(polys[j]):
                p[a] = p[a] - coef * value
        norm = _inner(p, p, c)
        if is_zero(norm) or (isinstance(norm, QSeries) and norm[0] == 0):
            raise SingularHankel(f"Hankel determinant of size {k + 1} is singular")
        polys.append(p)
        norms.append(norm)
    logger.debug(f"monic_ops {c.id.value}: built p_0..p_{K}")
    return MonicOPSeq(tuple(tuple(p) for p in polys), tuple(norms))


@lru_cache(maxsize=None)
def dual_hahn_ops(eps: int, K: int) -> MonicOPSeq:
    """Monic orthogonal polynomials of mu_eps at q = 0 (continuous dual Hahn)."""
    moment_id = MomentId.MU0 if eps == 0 else MomentId.MU1
    return monic_ops(moments(moment_id, 2 * K), K)


def q_dual_hahn_ops(eps: int, K: int, order: int) -> MonicOPSeq:
    """Monic orthogonal polynomials of nu_eps as q-series."""
    moment_id = MomentId.NU0 if eps == 0 else MomentId.NU1
    return monic_ops(moments(moment_id, 2 * K, order), K)


def norms_product(eps: int, m: int, order: Optional[int] = None) -> Ring:
    """prod_{i<m} ||p_i^(eps)||^2; with an order, the q-deformed norms."""
    if m == 0:
        return Fraction(1)
    ops = dual_hahn_ops(eps, m) if order is None else q_dual_hahn_ops(eps, m - 1, order)
    value = Fraction(1)
    for i in range(m):
        value = ops.norm(i) * value
    return value


def norms_product_closed_form(eps: int, m: int) -> Fraction:
    top = 2 * m - 1 + eps
    value = Fraction(1, 2 ** (m * (2 * m - 1 + 2 * eps)))
    for i in range(1, top + 1):
        value *= factorial(i)
    return value


def norms_product_check(eps: int, m: int) -> Tuple[Fraction, Fraction]:
    """(Gram-Schmidt product of norms, closed-form product of factorials)."""
    return norms_product(eps, m), norms_product_closed_form(eps, m)


def q_norm_closed_form(eps: int, k: int, square: QSeries) -> QSeries:
    """Norm of p_k^(eps)(x; q) as a power of the squares theta series."""
    a = 2 * k + 1 + eps
    scale = Fraction(factorial(a) * factorial(a - 1), 2 ** (4 * k + 1 + 2 * eps))
    return square ** (8 * k + 4 + 4 * eps) * scale


def meixner_pollaczek_sequence(K: int) -> List[Poly]:
    """p_0..p_K with p_2k(x) = p_k^(0)(x^2) and p_(2k+1)(x) = x p_k^(1)(x^2)."""
    even = dual_hahn_ops(0, K // 2 + 1)
    odd = dual_hahn_ops(1, K // 2 + 1)
    out: List[Poly] = []
    for n in range(K + 1):
        k, r = divmod(n, 2)
        source = (odd if r else even).coefficients(k)
        poly = [Fraction(0)] * (n + 1)
        for a, value in enumerate(source):
            poly[2 * a + r] = value
        out.append(tuple(poly))
    return out


# Schur-type polynomials

def _group_points(points: Sequence[Fraction]) -> List[Tuple[Fraction, int]]:
    groups: Dict[Fraction, int] = {}
    for x in points:
        groups[x] = groups.get(x, 0) + 1
    return list(groups.items())


def _confluent_rows(polys: Sequence[Poly], groups: Sequence[Tuple[Fraction, int]]) -> List[List[Ring]]:
    rows = []
    for y, multiplicity in groups:
        for d in range(multiplicity):
            rows.append([poly_taylor(p, y, d) for p in polys])
    return rows


def schur_type_P(eps: int, n: int, m: int, points: Sequence, confluent: bool = False) -> Fraction:
    """det(p_(n+j-1)^(eps)(x_i)) / Delta(x) for m points.

    With confluent=True coincident points are allowed: each value of multiplicity r
    contributes its Taylor rows f(y), f'(y), ..., f^(r-1)(y)/(r-1)! to both the
    numerator and the monomial denominator.
    """
    points = [Fraction(x) for x in points]
    if len(points) != m:
        raise RepeatedPoint(f"expected {m} points, got {len(points)}")
    if m == 0:
        return Fraction(1)
    ops = dual_hahn_ops(eps, n + m - 1)
    polys = [ops.coefficients(n + j) for j in range(m)]
    if len(set(points)) == m:
        numerator = determinant([[poly_eval(p, x) for p in polys] for x in points])
        return numerator / vandermonde(points)
    if not confluent:
        raise RepeatedPoint("Schur-type polynomial at coincident points")
    groups = _group_points(points)
    monomials = [tuple([Fraction(0)] * j + [Fraction(1)]) for j in range(m)]
    numerator = determinant(_confluent_rows(polys, groups))
    denominator = determinant(_confluent_rows(monomials, groups))
    return numerator / denominator


# Correlation functions

def _darboux_kernel(ops: MonicOPSeq, n: int, x: Fraction, y: Fraction) -> Fraction:
    if x == y:
        return (ops.derivative_eval(n, x) * ops.evaluate(n - 1, x)
                - ops.derivative_eval(n - 1, x) * ops.evaluate(n, x))
    return (ops.evaluate(n, x) * ops.evaluate(n - 1, y)
            - ops.evaluate(n - 1, x) * ops.evaluate(n, y)) / (x - y)


def _correlation_cd(ops: MonicOPSeq, s: int, n: int, points: List[Fraction]) -> Fraction:
    matrix = [[_darboux_kernel(ops, n, x, y) for y in points] for x in points]
    value = determinant(matrix)
    return value / (ops.norm(n - 1) ** s * vandermonde(points) ** 2)


def _correlation_sumsq(ops: MonicOPSeq, s: int, n: int, points: List[Fraction]) -> Fraction:
    values = [[ops.evaluate(k, x) for x in points] for k in range(n)]
    total = Fraction(0)
    for ks in combinations(range(n), s):
        minor = determinant([values[k] for k in ks])
        if minor:
            weight = Fraction(1)
            for k in ks:
                weight *= ops.norm(k)
            total += minor * minor / weight
    return total / vandermonde(points) ** 2


def _partitions_in_box(rows: int, cols: int):
    for parts in combinations_with_replacement(range(cols, -1, -1), rows):
        yield parts


def _correlation_schur(eps: int, ops: MonicOPSeq, s: int, n: int, points: List[Fraction]) -> Fraction:
    c = moments(MomentId.MU0 if eps == 0 else MomentId.MU1, 2 * n)
    full = hankel_from_moments(c.values, n)
    denominator = Fraction(1)
    for i in range(n):
        denominator *= ops.norm(i)

    shapes = list(_partitions_in_box(s, n - s))
    schur_values = {lam: schur_eval(lam, points) for lam in shapes}
    total = Fraction(0)
    for lam in shapes:
        S = {lam[k] + s - k for k in range(s)}
        rows = [i for i in range(n) if i + 1 not in S]
        for mu in shapes:
            T = {mu[k] + s - k for k in range(s)}
            cols = [j for j in range(n) if j + 1 not in T]
            minor = determinant([[full[i][j] for j in cols] for i in rows])
            if minor:
                sign = -1 if (sum(lam) + sum(mu)) % 2 else 1
                total += sign * minor * schur_values[lam] * schur_values[mu]
    return total / denominator


def _correlation_wronskian(ops: MonicOPSeq, s: int, n: int, points: List[Fraction]) -> Fraction:
    indices = [n - s + j for j in range(2 * s)]
    matrix = [[ops.evaluate(k, x) for k in indices] for x in points]
    matrix += [[ops.derivative_eval(k, x) for k in indices] for x in points]
    value = determinant(matrix)
    norms = Fraction(1)
    for i in range(1, s + 1):
        norms *= ops.norm(n - i)
    sign = -1 if (s * (s - 1) // 2) % 2 else 1
    return sign * value / (norms * vandermonde(points) ** 4)


def correlation_eval(eps: int, s: int, n: int, points: Sequence, route: str = 'sumsq') -> Fraction:
    """Correlation function C_s^(n,eps) of the mu_eps ensemble at the given points.

    Args:
        eps: 0 or 1
        s: number of points
        n: ensemble size, s <= n
        points: rational points
        route: 'cd' (Christoffel-Darboux), 'sumsq', 'schur' or 'wronskian'
    """
    points = [Fraction(x) for x in points]
    if route not in CORRELATION_ROUTES:
        raise RouteUnavailable(f"unknown correlation route {route!r}")
    if len(points) != s:
        raise RepeatedPoint(f"expected {s} points, got {len(points)}")
    if s > n:
        raise RouteUnavailable(f"correlation C_{s}^{n} needs s <= n")
    if s == 0:
        return Fraction(1)
    if len(set(points)) != s:
        raise RepeatedPoint("correlation functions need pairwise distinct points")
    ops = dual_hahn_ops(eps, n + s)
    if route == 'cd':
        return _correlation_cd(ops, s, n, points)
    if route == 'sumsq':
        return _correlation_sumsq(ops, s, n, points)
    if route == 'schur':
        return _correlation_schur(eps, ops, s, n, points)
    return _correlation_wronskian(ops, s, n, points)


@lru_cache(maxsize=65536)
def correlation_at_squares(eps: int, s: int, n: int, ks: Tuple[int, ...]) -> Fraction:
    """C_s^(n,eps)(-k_1^2, ..., -k_s^2), cached for the counting formulas."""
    return correlation_eval(eps, s, n, [Fraction(-k * k) for k in ks], route='sumsq')


# Hankel determinant against correlation sums

def lambda_atom(eps: int, k: int, order: int) -> QSeries:
    """4 q^k k^(1+2eps) / (1 +- (-q)^k) as a u-series."""
    kind = LambertKind.PLUS if eps == 0 else LambertKind.MINUS
    coeffs = [Fraction(0)] * (order + 1)
    weight = 4 * k ** (1 + 2 * eps)
    l = 1
    while 2 * k * l <= order:
        coeffs[2 * k * l] = Fraction(weight * lambert_term_sign(kind, k, l))
        l += 1
    return QSeries(coeffs, order)


def hcl_sides(eps: int, m: int, K: int) -> Tuple[QSeries, QSeries, QSeries]:
    """Sides of the Hankel/correlation expansion with lambda truncated to atoms k <= K.

    Returns (Hankel determinant of mu + truncated lambda,
    product of norms times the correlation sum over atom subsets,
    Hankel determinant of the full nu functional), all to q-order K.
    """
    order = 2 * K + 1
    atoms = {k: lambda_atom(eps, k, order) for k in range(1, K + 1)}
    mu = moments(MomentId.MU0 if eps == 0 else MomentId.MU1, 2 * m)
    truncated = []
    for a in range(2 * m - 1):
        value = QSeries.constant(mu[a], order)
        for k, atom in atoms.items():
            value = value + atom * ((-k * k) ** a)
        truncated.append(value)
    lhs = determinant(hankel_from_moments(truncated, m))

    rhs = QSeries.zero(order)
    for s in range(m + 1):
        for ks in combinations(range(K, 0, -1), s):
            points = [Fraction(-k * k) for k in ks]
            weight = QSeries.one(order)
            for k in ks:
                weight = weight * atoms[k]
            if weight.is_zero():
                continue
            rhs = rhs + weight * (vandermonde(points) ** 2 * correlation_eval(eps, s, m, points))
    rhs = rhs * norms_product(eps, m)

    nu = moments(MomentId.NU0 if eps == 0 else MomentId.NU1, 2 * m, order)
    full = determinant(hankel_from_moments(nu.values, m))
    return lhs, rhs, full
