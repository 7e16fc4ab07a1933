"""
Exact Point and Matrix Checks
Pfaffian lemmas, Hankel and orthogonal polynomial identities, correlation routes and
Schur function specializations, evaluated on seeded random exact data
"""

import logging
import random
from fractions import Fraction
from itertools import combinations, permutations, product
from math import comb, factorial
from typing import List, Sequence, Tuple

import sympy

from ..config.settings import settings
from ..core.linalg import determinant, hankel_from_moments, permutation_sign, pfaffian
from ..core.orthopoly import (
    MomentId,
    bernoulli,
    correlation_eval,
    hcl_sides,
    meixner_pollaczek_sequence,
    monic_ops,
    moments,
    norms_product_check,
    tangent_numbers,
    tangent_numbers_by_series,
)
from ..core.symfun import (
    balanced_label,
    q_at_ones,
    q_balanced_at_ones,
    q_lambda_eval,
    q_lambda_limit_at_ones,
    q_lambda_pdef,
    s_at_ones,
    s_mu_eval,
)
from .reports import VerifyReport, cases_report, merge, series_report

logger = logging.getLogger(__name__)

Matrix = List[List[Fraction]]


# Seeded random exact data

def seeded(salt: str) -> random.Random:
    """Generator keyed by the configured seed and the check name."""
    return random.Random(f"{settings.seed}:{salt}")


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 5))


def random_matrix(rng: random.Random, n: int) -> Matrix:
    return [[random_rational(rng) for _ in range(n)] for _ in range(n)]


def random_skew(rng: random.Random, n: int) -> Matrix:
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        value = random_rational(rng)
        matrix[i][j], matrix[j][i] = value, -value
    return matrix


def random_points(rng: random.Random, count: int, positive: bool = False) -> List[Fraction]:
    """Pairwise distinct nonzero rationals without antipodal pairs."""
    points: List[Fraction] = []
    while len(points) < count:
        x = Fraction(rng.randint(1, 12), rng.randint(1, 4))
        if not positive and rng.random() < 0.5:
            x = -x
        if x not in points and -x not in points:
            points.append(x)
    return points


# Pfaffians

def verify_pdi(cases: int = 20) -> VerifyReport:
    """pf(A)^2 = det(A) in even dimension; the two pfaffian algorithms agree."""
    rng = seeded('pdi')
    pairs = []
    for index in range(cases):
        n = (2, 4, 6)[index % 3]
        a = random_skew(rng, n)
        value = pfaffian(a, method='definition')
        pairs.append((value * value, determinant(a)))
        pairs.append((value, pfaffian(a, method='expansion')))
    return cases_report('pdi', {'cases': cases}, pairs)


def verify_spe(cases: int = 20) -> VerifyReport:
    """pf((x_i - x_j)/(x_i + x_j)) = prod_(i<j) (x_i - x_j)/(x_i + x_j)."""
    rng = seeded('spe')
    point_sets = [[Fraction(1), Fraction(2), Fraction(0)]]
    point_sets += [random_points(rng, 2 + index % 4, positive=True) for index in range(cases)]
    pairs = []
    for xs in point_sets:
        n = len(xs)
        matrix = [[Fraction(0) if i == j else (xs[i] - xs[j]) / (xs[i] + xs[j]) for j in range(n)] for i in range(n)]
        expected = Fraction(1)
        for i, j in combinations(range(n), 2):
            expected *= (xs[i] - xs[j]) / (xs[i] + xs[j])
        pairs.append((pfaffian(matrix), expected))
    return cases_report('spe', {'cases': len(point_sets)}, pairs)


def verify_rol(cases: int = 50) -> VerifyReport:
    """pf(a_ij + b_i - b_j) = pf(a_ij) in odd dimension."""
    rng = seeded('rol')
    pairs = []
    for index in range(cases):
        n = (3, 5, 7)[index % 3]
        a = random_skew(rng, n)
        b = [random_rational(rng) for _ in range(n)]
        shifted = [[a[i][j] + b[i] - b[j] for j in range(n)] for i in range(n)]
        pairs.append((pfaffian(shifted), pfaffian(a)))
    return cases_report('rol', {'cases': cases}, pairs)


def pfaffian_sum_expansion(a: Matrix, b: Matrix) -> Fraction:
    """1/M! sum_s 2^(s-M) C(M, s) sum_sigma sgn(sigma) prod_(i<=s) a prod_(i>s) b."""
    n = len(a)
    half = n // 2
    total = Fraction(0)
    for perm in permutations(range(n)):
        sign = permutation_sign(perm)
        pairs = [(perm[2 * i], perm[2 * i + 1]) for i in range(half)]
        for s in range(half + 1):
            term = Fraction(sign * comb(half, s), 2 ** (half - s))
            for i, j in pairs[:s]:
                term *= a[i][j]
            for i, j in pairs[s:]:
                term *= b[i][j]
            total += term
    return total / factorial(half)


def verify_psl(cases: int = 50) -> VerifyReport:
    """pf(A - A^T + B) against its expansion in products of A and B entries."""
    rng = seeded('psl')
    pairs = []
    for index in range(cases):
        n = 2 + index % 5
        a = random_matrix(rng, n)
        b = random_skew(rng, n)
        combined = [[a[i][j] - a[j][i] + b[i][j] for j in range(n)] for i in range(n)]
        pairs.append((pfaffian(combined), pfaffian_sum_expansion(a, b)))
    return cases_report('psl', {'cases': cases}, pairs)


# Hankel determinants and orthogonal polynomials

def vandermonde_square_coefficients(m: int) -> List[Tuple[Tuple[int, ...], int]]:
    """Monomial exponents and coefficients of prod_(i<j) (x_j - x_i)^2."""
    xs = sympy.symbols(f'x1:{m + 1}')
    expression = sympy.Integer(1)
    for i, j in combinations(range(m), 2):
        expression *= (xs[j] - xs[i]) ** 2
    return [(tuple(exponents), int(coefficient))
            for exponents, coefficient in sympy.Poly(expression, *xs).terms()]


def verify_hdl(m_max: int = 3, cases: int = 10) -> VerifyReport:
    """m! det(c_(i+j)) in its permutation form and its Vandermonde coefficient form."""
    rng = seeded('hdl')
    pairs = []
    for index in range(cases):
        m = 1 + index % m_max
        c = [random_rational(rng) for _ in range(2 * m - 1)]
        target = factorial(m) * determinant(hankel_from_moments(c, m))
        double_sum = Fraction(0)
        for sigma in permutations(range(m)):
            for tau in permutations(range(m)):
                term = Fraction(permutation_sign(sigma) * permutation_sign(tau))
                for i in range(m):
                    term *= c[sigma[i] + tau[i]]
                double_sum += term
        coefficient_sum = Fraction(0)
        for exponents, coefficient in vandermonde_square_coefficients(m):
            term = Fraction(coefficient)
            for e in exponents:
                term *= c[e]
            coefficient_sum += term
        pairs.append((double_sum, target))
        pairs.append((coefficient_sum, target))
    return cases_report('hdl', {'cases': cases, 'm_max': m_max}, pairs)


def _inner(f: Sequence, g: Sequence, c: Sequence) -> Fraction:
    return sum((fa * gb * c[a + b] for a, fa in enumerate(f) for b, gb in enumerate(g)), Fraction(0))


def verify_hop(K: int = 4) -> VerifyReport:
    """Gram orthogonality and prod ||p_(i-1)||^2 = det(c_(i+j)) for the tangent functionals."""
    pairs = []
    for moment_id in (MomentId.MU0, MomentId.MU1):
        c = moments(moment_id, 2 * K)
        ops = monic_ops(c, K)
        for i, j in combinations(range(K + 1), 2):
            pairs.append((_inner(ops.coefficients(i), ops.coefficients(j), c.values), 0))
        norms = Fraction(1)
        for m in range(1, K + 1):
            norms *= ops.norm(m - 1)
            pairs.append((norms, determinant(hankel_from_moments(c.values, m))))
    return cases_report('hop', {'K': K}, pairs)


def verify_en(m_max: int = 4) -> VerifyReport:
    """Products of the norms at q = 0 against the factorial closed forms."""
    pairs = [norms_product_check(eps, m) for eps in (0, 1) for m in range(1, m_max + 1)]
    return cases_report('en', {'m_max': m_max}, pairs)


def verify_tangent(K: int = 12) -> VerifyReport:
    """Tangent numbers from Bernoulli numbers against the series quotient tan(x/2)."""
    by_bernoulli = tangent_numbers(K)
    by_series = tangent_numbers_by_series(K)
    b = bernoulli(2 * K)
    pairs = []
    for k in range(1, K + 1):
        pairs.append((by_bernoulli[k], by_series[k]))
        pairs.append((by_bernoulli[k], (4 ** k - 1) * abs(b[2 * k]) / k))
    return cases_report('tangent', {'K': K}, pairs)


def verify_muce(K: int = 12, order: int = 50) -> VerifyReport:
    """mu_0(x^k) = mu_1(x^(k-1)) = t_(k+1), and nu = mu + lambda index by index."""
    t = tangent_numbers(K + 2)
    mu0 = moments(MomentId.MU0, K)
    mu1 = moments(MomentId.MU1, K)
    pairs = [(mu0[0], t[1])]
    for k in range(1, K + 1):
        pairs.append((mu0[k], t[k + 1]))
        pairs.append((mu1[k - 1], t[k + 1]))
    exact = cases_report('muce', {'K': K}, pairs)

    U = 2 * order + 1
    reports = [exact]
    for nu_id, lambda_id, mu in ((MomentId.NU0, MomentId.LAMBDA0, mu0),
                                 (MomentId.NU1, MomentId.LAMBDA1, mu1)):
        nu = moments(nu_id, 4, U)
        lam = moments(lambda_id, 4, U)
        for a in range(5):
            reports.append(series_report('muce', {'index': a, 'order': order},
                                         nu[a], lam[a] + mu[a], order))
    return merge('muce', {'K': K, 'order': order}, reports)


def verify_mp(K: int = 8) -> VerifyReport:
    """The interleaved sequence is the monic orthogonal sequence of the odd-weight functional."""
    c = moments(MomentId.MEIXNER_POLLACZEK, 2 * K)
    merged = meixner_pollaczek_sequence(K)
    from_moments = monic_ops(c, K)
    pairs = []
    for k in range(K + 1):
        for a, value in enumerate(merged[k]):
            pairs.append((value, from_moments.coefficients(k)[a]))
    for i, j in combinations(range(K + 1), 2):
        pairs.append((_inner(merged[i], merged[j], c.values), 0))
    return cases_report('mp', {'K': K}, pairs)


# Correlation functions

def verify_cp(cases: int = 20) -> VerifyReport:
    """Christoffel-Darboux, sum of squares, Schur and Wronskian routes agree."""
    rng = seeded('cp')
    pairs = []
    for index in range(cases):
        eps = index % 2
        s = 1 + (index // 2) % 2
        n = 2 + index % 3
        points = random_points(rng, s)
        reference = correlation_eval(eps, s, n, points, route='cd')
        for route in ('sumsq', 'schur', 'wronskian'):
            pairs.append((correlation_eval(eps, s, n, points, route=route), reference))
    return cases_report('cp', {'cases': cases}, pairs)


def hcl_check(eps: int, m: int, K: int = 20) -> VerifyReport:
    """Hankel determinant of mu plus K lambda atoms against the correlation expansion."""
    lhs, rhs, full = hcl_sides(eps, m, K)
    params = {'K': K, 'eps': eps, 'm': m}
    return merge('hcl', params, [
        series_report('hcl', params, lhs, rhs, K),
        series_report('hcl', params, lhs, full, K),
    ])


# Schur functions

def verify_sym(cases: int = 10) -> VerifyReport:
    """Bialternant laws, the all-ones product and the two Schur Q expressions."""
    rng = seeded('sym')
    pairs = [
        (s_mu_eval([2, 0], [3, 1]), 4),
        (s_at_ones([2, 0], 2), 2),
        (s_at_ones([0], 1), 1),
        (s_at_ones(balanced_label([2, 1]), 4), 6),
    ]
    for index in range(cases):
        n = 2 + index % 3
        xs = random_points(rng, n, positive=True)
        mu = sorted(rng.sample(range(-4, 6), n), reverse=True)
        value = s_mu_eval(mu, xs)
        swapped = [mu[1], mu[0]] + mu[2:]
        pairs.append((s_mu_eval(swapped, xs), -value))
        shift = rng.randint(-2, 2)
        scale = Fraction(1)
        for x in xs:
            scale *= x ** shift
        pairs.append((s_mu_eval([e + shift for e in mu], xs), scale * value))

        ks = sorted(rng.sample(range(1, 5), n // 2), reverse=True)
        interleaved = [e for k in ks for e in (-k, k)]
        sign = (-1) ** len(ks)
        if n % 2:
            pairs.append((s_mu_eval(interleaved + [0], xs), sign * s_mu_eval(list(balanced_label(ks)) + [0], xs)))
        else:
            pairs.append((s_mu_eval(interleaved, xs), sign * s_mu_eval(balanced_label(ks), xs)))

        label = [rng.randint(-3, 3) for _ in range(1 + index % 2)]
        points = random_points(rng, 2 + index % 3)
        pairs.append((q_lambda_eval(label, points), q_lambda_pdef(label, points)))
    return cases_report('sym', {'cases': cases}, pairs)


def verify_qc() -> VerifyReport:
    """Balanced specialization through correlation functions against the exact limit of Q."""
    pairs = []
    for n in (1, 2):
        for k in (1, 2, 3):
            for parity, size in (('even', 2 * n), ('odd', 2 * n + 1)):
                limit = q_lambda_limit_at_ones(balanced_label([k]), size)
                pairs.append((q_balanced_at_ones([k], n, parity), limit))
    return cases_report('qc', {'m': 1, 'n': [1, 2]}, pairs)


QC_GENERAL_LABELS = ((1,), (2,), (3, -1), (2, 1), (1, -1), (2, -2), (3, 1, -2))


def verify_qc_general(n_max: int = 4) -> VerifyReport:
    """Q_lambda(1^n) by confluent Schur-type polynomials against the exact limit of Q."""
    pairs = []
    for label in QC_GENERAL_LABELS:
        for n in range(len(label), n_max + 1):
            pairs.append((q_at_ones(label, n), q_lambda_limit_at_ones(label, n)))
    return cases_report('qc_general', {'n_max': n_max}, pairs)


def _sep_sides(xs: List[Fraction], c: List[Fraction]) -> Tuple[Fraction, Fraction, Fraction]:
    """Pfaffian, decreasing-label form and interleaved-label form of the separated expansion."""
    m = len(xs)
    K = len(c)
    matrix = [[Fraction(0) if i == j else
               (xs[i] - xs[j]) / (xs[i] + xs[j])
               + sum(c[k - 1] * ((xs[i] / xs[j]) ** k - (xs[j] / xs[i]) ** k) for k in range(1, K + 1))
               for j in range(m)] for i in range(m)]
    prefactor = Fraction(1)
    for i, j in combinations(range(m), 2):
        prefactor *= (xs[i] - xs[j]) / (xs[i] + xs[j])

    decreasing = Fraction(0)
    interleaved = Fraction(0)
    for s in range(m // 2 + 1):
        for ks in combinations(range(K, 0, -1), s):
            weight = Fraction(1, 4 ** s)
            for k in ks:
                weight *= c[k - 1]
            decreasing += weight * q_lambda_eval(balanced_label(ks), xs)
        for ks in product(range(1, K + 1), repeat=s):
            weight = Fraction(1, 4 ** s * factorial(s))
            for k in ks:
                weight *= c[k - 1]
            interleaved += weight * q_lambda_eval([e for k in ks for e in (k, -k)], xs)
    return pfaffian(matrix), prefactor * decreasing, prefactor * interleaved


def verify_sep(cases: int = 8, K: int = 3) -> VerifyReport:
    """Pfaffian of the Schur kernel plus a finite Laurent part against its Schur Q expansion."""
    rng = seeded('sep')
    pairs = []
    for index in range(cases):
        xs = random_points(rng, 2 + index % 4, positive=True)
        c = [random_rational(rng) for _ in range(K)]
        value, decreasing, interleaved = _sep_sides(xs, c)
        pairs.append((value, decreasing))
        pairs.append((value, interleaved))
    return cases_report('sep', {'K': K, 'cases': cases}, pairs)
