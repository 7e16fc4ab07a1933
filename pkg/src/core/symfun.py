"""
Schur-type Functions
Bialternants S_mu, Schur polynomials s_lambda and Schur Q-polynomials at rational points
"""

import logging
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import List, Sequence, Tuple

from .exceptions import (
    AntipodalPoints,
    LabelNotStrict,
    LabelTooLong,
    NotStrictlyDecreasing,
    RepeatedPoint,
    TooManyVariables,
    ZeroPointWithNegativeExponent,
)
from .linalg import determinant, permutation_sign

logger = logging.getLogger(__name__)

MAX_PERMUTATION_VARIABLES = 8


def _rats(values: Sequence) -> List[Fraction]:
    return [Fraction(v) for v in values]


def _require_distinct(xs: Sequence[Fraction]) -> None:
    if len(set(xs)) != len(xs):
        raise RepeatedPoint(f"points are not pairwise distinct: {[str(x) for x in xs]}")


def _require_powers(label: Sequence[int], xs: Sequence[Fraction]) -> None:
    if any(x == 0 for x in xs) and any(e < 0 for e in label):
        raise ZeroPointWithNegativeExponent("negative exponent at a zero point")


def vandermonde(xs: Sequence) -> Fraction:
    """prod_{i<j} (x_j - x_i), equal to det(x_i^(j-1))."""
    value = Fraction(1)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            value *= xs[j] - xs[i]
    return value


def balanced_label(ks: Sequence[int]) -> Tuple[int, ...]:
    """(k_1, ..., k_m, -k_m, ..., -k_1)."""
    return tuple(ks) + tuple(-k for k in reversed(ks))


def check_balanced_parts(ks: Sequence[int]) -> None:
    if any(k < 1 for k in ks) or any(a <= b for a, b in zip(ks, ks[1:])):
        raise LabelNotStrict(f"balanced label parts must be strictly decreasing and positive: {list(ks)}")


def s_mu_eval(mu: Sequence[int], xs: Sequence) -> Fraction:
    """det(x_j^mu_i) / prod_{i<j} (x_i - x_j)."""
    xs = _rats(xs)
    if len(mu) != len(xs):
        raise LabelTooLong(f"label of length {len(mu)} needs {len(mu)} points, got {len(xs)}")
    _require_distinct(xs)
    _require_powers(mu, xs)
    alternant = [[x ** e for x in xs] for e in mu]
    denominator = Fraction(1)
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            denominator *= xs[i] - xs[j]
    return determinant(alternant) / denominator


def s_at_ones(mu: Sequence[int], m: int = None) -> Fraction:
    """Value of S_mu(1, ..., 1) by the hook-length style product."""
    if m is not None and m != len(mu):
        raise LabelTooLong(f"label length {len(mu)} differs from m = {m}")
    if any(a <= b for a, b in zip(mu, mu[1:])):
        raise NotStrictlyDecreasing(f"label must be strictly decreasing: {list(mu)}")
    value = Fraction(1)
    for i in range(len(mu)):
        for j in range(i + 1, len(mu)):
            value *= Fraction(mu[i] - mu[j], j - i)
    return value


def complete_homogeneous(k: int, xs: Sequence) -> Fraction:
    if k < 0:
        return Fraction(0)
    table = [Fraction(1)] + [Fraction(0)] * k
    for x in xs:
        for degree in range(1, k + 1):
            table[degree] += x * table[degree - 1]
    return table[k]


def schur_eval(partition: Sequence[int], xs: Sequence) -> Fraction:
    """Schur polynomial s_lambda(xs); repeated points go through Jacobi-Trudi."""
    xs = _rats(xs)
    parts = [p for p in partition if p]
    m = len(xs)
    if len(parts) > m:
        return Fraction(0)
    if not parts:
        return Fraction(1)
    if len(set(xs)) == m:
        padded = parts + [0] * (m - len(parts))
        return s_mu_eval([padded[i] + m - 1 - i for i in range(m)], xs)
    size = len(parts)
    matrix = [[complete_homogeneous(parts[i] - i + j, xs) for j in range(size)] for i in range(size)]
    return determinant(matrix)


def _check_q_points(label: Sequence[int], xs: Sequence[Fraction]) -> None:
    n = len(xs)
    if len(label) > n:
        raise LabelTooLong(f"label of length {len(label)} exceeds {n} variables")
    if n > MAX_PERMUTATION_VARIABLES:
        raise TooManyVariables(f"{n} variables exceed the cap of {MAX_PERMUTATION_VARIABLES}")
    _require_distinct(xs)
    _require_powers(label, xs)
    for i in range(n):
        for j in range(i + 1, n):
            if xs[i] + xs[j] == 0:
                raise AntipodalPoints(f"points {xs[i]} and {xs[j]} are antipodal")


def q_lambda_eval(label: Sequence[int], xs: Sequence) -> Fraction:
    """Schur Q-polynomial through the signed full-permutation expression."""
    xs = _rats(xs)
    _check_q_points(label, xs)
    n, m = len(xs), len(label)
    k = (n - m) // 2
    ratio = [[(a - b) / (a + b) for b in xs] for a in xs]
    powers = [{e: x ** e for e in set(label)} for x in xs]

    total = Fraction(0)
    for perm in permutations(range(n)):
        term = Fraction(permutation_sign(perm))
        for i, e in enumerate(label):
            term *= powers[perm[i]][e]
        for i in range(k):
            term *= ratio[perm[m + 2 * i]][perm[m + 2 * i + 1]]
        total += term

    prefactor = Fraction(2 ** m, 2 ** k * factorial(k))
    for i in range(n):
        for j in range(i + 1, n):
            prefactor /= ratio[i][j]
    return prefactor * total


def q_lambda_pdef(label: Sequence[int], xs: Sequence) -> Fraction:
    """Schur Q-polynomial by symmetrizing over S_n / S_(n-m)."""
    xs = _rats(xs)
    _check_q_points(label, xs)
    n, m = len(xs), len(label)
    plus_over_minus = [[(a + b) / (a - b) if a != b else None for b in xs] for a in xs]
    total = Fraction(0)
    for chosen in permutations(range(n), m):
        rest = [b for b in range(n) if b not in chosen]
        term = Fraction(1)
        for i, a in enumerate(chosen):
            term *= xs[a] ** label[i]
            for a2 in chosen[i + 1:]:
                term *= plus_over_minus[a][a2]
            for b in rest:
                term *= plus_over_minus[a][b]
        total += term
    return 2 ** m * total


def q_lambda_limit_at_ones(label: Sequence[int], n: int) -> Fraction:
    """Q_lambda(1^n) as the exact limit along x_i = 1 + i*delta.

    prod x_i^K * Q is a polynomial in delta of degree at most n(2K + n), with
    K = max |lambda_i|; it is interpolated on delta = 1, 2, ... and evaluated at 0.
    """
    bound = max([abs(e) for e in label] + [0])
    degree = n * (2 * bound + n)
    nodes = [Fraction(d) for d in range(1, degree + 2)]
    values = []
    for delta in nodes:
        xs = [1 + (i + 1) * delta for i in range(n)]
        scale = Fraction(1)
        for x in xs:
            scale *= x ** bound
        values.append(scale * q_lambda_eval(label, xs))
    result = Fraction(0)
    for j, (node, value) in enumerate(zip(nodes, values)):
        weight = Fraction(1)
        for i, other in enumerate(nodes):
            if i != j:
                weight *= -other / (node - other)
        result += weight * value
    return result


def q_balanced_at_ones(ks: Sequence[int], n: int, parity: str = 'even') -> Fraction:
    """Q_(k_1..k_m, -k_m..-k_1) at 1^(2n) or 1^(2n+1) through correlation functions."""
    from .orthopoly import correlation_eval

    ks = list(ks)
    check_balanced_parts(ks)
    m = len(ks)
    if m > n:
        raise LabelTooLong(f"{2 * m} label entries exceed the variables of 1^{2 * n}")
    if m == 0:
        return Fraction(1)
    eps = 0 if parity == 'even' else 1
    value = Fraction(8 ** m)
    for k in ks:
        value *= k ** (1 + 2 * eps)
    for i in range(m):
        for j in range(i + 1, m):
            value *= (ks[i] ** 2 - ks[j] ** 2) ** 2
    if eps:
        value *= (-1) ** m
    return value * correlation_eval(eps, m, n, [Fraction(-k * k) for k in ks], route='sumsq')


def q_at_ones(label: Sequence[int], n: int) -> Fraction:
    """Q_lambda(1^n) for an arbitrary integer label via confluent Schur-type polynomials."""
    from .orthopoly import schur_type_P

    label = list(label)
    m = len(label)
    if m > n:
        raise LabelTooLong(f"label of length {m} exceeds {n} variables")
    k, eps = divmod(n - m, 2)
    value = Fraction(2 ** (m * (2 * n + 1 - m) // 2))
    value *= (-1) ** (k * m)
    for i in range(1, m + 1):
        value /= factorial(n - i)
    for e in label:
        value *= e ** eps
    for i in range(m):
        for j in range(i + 1, m):
            value *= label[i] - label[j]
    if value == 0:
        return value
    points = [Fraction(-e * e) for e in label]
    return value * schur_type_P(eps, k, m, points, confluent=True)
