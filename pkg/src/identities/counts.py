"""
Counting Formulas
Representation numbers produced by the finite (k, l) sums of the squares and triangles identities
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import factorial
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from ..core.exceptions import InvalidParams, UnknownIdentity, UnsupportedRange
from ..core.linalg import determinant, hankel_from_moments
from ..core.oracle import (
    DIVISOR_FORMULAS,
    RepKind,
    classical_kind,
    classical_summands,
    divisor_count,
    rep_counts,
)
from ..core.orthopoly import MomentId, correlation_at_squares, moments, schur_type_P
from ..core.symfun import schur_eval
from .enumeration import (
    SlotBlock,
    enumerate_weighted,
    odd_k,
    sign_even_l,
    sign_minus,
    sign_odd_k,
    sign_odd_l,
    sign_plus,
    squared_differences,
)

logger = logging.getLogger(__name__)

Count = Union[int, Fraction]

# Largest supported m per parameterized formula
M_RANGES: Dict[str, int] = {
    'kmt1': 2,
    'kmt2': 2,
    'gm': 3,
    'hti': 3,
    'sst_sq': 3,
    'sst_oct': 3,
    'mt_sq': 3,
    'mt_oct': 3,
    'hsf': 3,
}

FIXED_TAGS = DIVISOR_FORMULAS + ('milne16', 'hsf8', 'hsf18', 'hsf18_amended')
COUNT_TAGS = tuple(M_RANGES) + FIXED_TAGS


def _superfactorial(n: int) -> int:
    value = 1
    for i in range(1, n + 1):
        value *= factorial(i)
    return value


def _product(values: Sequence[int], power: int = 1) -> int:
    value = 1
    for v in values:
        value *= v ** power
    return value


def _integral(value) -> Count:
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


def oracle_target(tag: str, m: Optional[int] = None) -> Tuple[RepKind, int]:
    """Representation kind and number of summands counted by a formula."""
    if tag in DIVISOR_FORMULAS:
        return classical_kind(tag), classical_summands(tag)
    targets = {
        'kmt1': lambda: (RepKind.TRIANGLES, 4 * m * m),
        'kmt2': lambda: (RepKind.TRIANGLES, 4 * m * (m + 1)),
        'gm': lambda: (RepKind.TRIANGLES, 2 * m),
        'hti': lambda: (RepKind.TRIANGLES, 2 * m * m),
        'milne16': lambda: (RepKind.SQUARES, 16),
        'sst_sq': lambda: (RepKind.SQUARES, 4 * m * m),
        'mt_sq': lambda: (RepKind.SQUARES, 4 * m * m),
        'sst_oct': lambda: (RepKind.SQUARES, 4 * m * (m + 1)),
        'mt_oct': lambda: (RepKind.SQUARES, 4 * m * (m + 1)),
        'hsf': lambda: (RepKind.SQUARES, 2 * m * m),
        'hsf8': lambda: (RepKind.SQUARES, 8),
        'hsf18': lambda: (RepKind.SQUARES, 18),
        'hsf18_amended': lambda: (RepKind.SQUARES, 18),
    }
    if tag not in targets:
        raise UnknownIdentity(tag)
    return targets[tag]()


def check_range(tag: str, m: Optional[int], nmax: int) -> None:
    if tag not in COUNT_TAGS:
        raise UnknownIdentity(tag)
    if tag in M_RANGES:
        if m is None:
            raise InvalidParams(f"{tag} needs the parameter m", param='m')
        if not 1 <= m <= M_RANGES[tag]:
            raise UnsupportedRange(f"{tag} supports 1 <= m <= {M_RANGES[tag]}, got m = {m}")
    if nmax < 0:
        raise UnsupportedRange(f"nmax must be non-negative, got {nmax}")


# Triangular number identities

def _kmt1(m: int, nmax: int) -> List[Fraction]:
    block = SlotBlock(m, l_parity=1, k_filter=odd_k)
    weights = enumerate_weighted(
        [block], lambda ks: _product(ks[0]) * squared_differences(ks[0]), 2 * nmax + m * m)
    factor = Fraction(1, 4 ** (m * (m - 1)) * _superfactorial(2 * m - 1))
    return [factor * weights[2 * n + m * m] for n in range(nmax + 1)]


def _kmt2(m: int, nmax: int) -> List[Fraction]:
    shift = m * (m + 1) // 2
    block = SlotBlock(m, l_parity=1)
    weights = enumerate_weighted(
        [block], lambda ks: _product(ks[0], 3) * squared_differences(ks[0]), nmax + shift)
    factor = Fraction(2 ** m, _superfactorial(2 * m))
    return [factor * weights[n + shift] for n in range(nmax + 1)]


def _gm_slot(m: int, i: int) -> SlotBlock:
    modulus = 4 * m
    plus, minus = (2 * i - 1) % modulus, (1 - 2 * i) % modulus
    return SlotBlock(
        1,
        l_parity=1,
        sign=lambda k, l: -1 if k % modulus == minus else 1,
        decreasing=False,
        k_filter=lambda slot, k: k % modulus in (plus, minus),
    )


def _gm(m: int, nmax: int) -> List[Fraction]:
    blocks = [_gm_slot(m, i) for i in range(1, m + 1)]
    weights = enumerate_weighted(blocks, None, 4 * m * nmax + m * m)
    return [weights[4 * m * n + m * m] for n in range(nmax + 1)]


def _hti(m: int, nmax: int) -> List[Fraction]:
    def coupling(ks):
        signed = [sign_odd_k(k, 1) * k for k in ks[0]]
        value = 1
        for i in range(m):
            for j in range(i + 1, m):
                value *= (signed[j] - signed[i]) ** 2
        return value

    block = SlotBlock(m, l_parity=1, sign=sign_odd_k, k_filter=odd_k)
    weights = enumerate_weighted([block], coupling, 4 * nmax + m * m)
    factor = Fraction((-1) ** (m * (m - 1) // 2), 4 ** (m * (m - 1)) * _superfactorial(m - 1) ** 2)
    return [factor * weights[4 * n + m * m] for n in range(nmax + 1)]


# Sums of squares: the sixteen squares display and the correlation/Schur forms

def _milne16(nmax: int) -> List[Fraction]:
    single = enumerate_weighted(
        [SlotBlock(1, sign=sign_plus)], lambda ks: ks[0][0] * (1 + ks[0][0] ** 2 + ks[0][0] ** 4), nmax)
    double = enumerate_weighted(
        [SlotBlock(2, sign=sign_plus)], lambda ks: _product(ks[0]) * squared_differences(ks[0]), nmax)
    values = [Fraction(2 ** 5, 3) * a + Fraction(2 ** 8, 3) * b for a, b in zip(single, double)]
    values[0] = Fraction(1)
    return values


def _tangent_hankel(eps: int, m: int) -> List[List[Fraction]]:
    moment_id = MomentId.MU0 if eps == 0 else MomentId.MU1
    return hankel_from_moments(moments(moment_id, 2 * m).values, m)


def _complement(shape: Sequence[int], m: int) -> List[int]:
    s = len(shape)
    taken = {shape[k] + s - k for k in range(s)}
    return [i for i in range(m) if i + 1 not in taken]


def milne_prefactor(eps: int, m: int) -> Fraction:
    if eps == 0:
        return Fraction(2 ** (m * (2 * m - 1)), _superfactorial(2 * m - 1))
    return Fraction(2 ** (m * (2 * m + 1)), _superfactorial(2 * m))


@lru_cache(maxsize=65536)
def milne_schur_weight(eps: int, m: int, ks: Tuple[int, ...]) -> Fraction:
    """Double sum over lambda, mu in the s x (m - s) box of the complementary tangent
    Hankel minor times s_lambda(k^2) s_mu(k^2)."""
    s = len(ks)
    full = _tangent_hankel(eps, m)
    points = [Fraction(k * k) for k in ks]
    shapes = list(combinations_with_replacement(range(m - s, -1, -1), s))
    schur_values = {shape: schur_eval(shape, points) for shape in shapes}
    total = Fraction(0)
    for lam in shapes:
        rows = _complement(lam, m)
        for mu in shapes:
            cols = _complement(mu, m)
            minor = determinant([[full[i][j] for j in cols] for i in rows])
            total += minor * schur_values[lam] * schur_values[mu]
    return total


def milne_sum(eps: int, m: int, nmax: int, inner: Callable[[Tuple[int, ...]], Fraction]) -> List[Fraction]:
    """sum_s 4^s sum_(k_1 > .. > k_s) prod k^(1+2eps) prod (k_i^2 - k_j^2)^2 inner(k) prod_i q^(k_i) / (1 +- (-q)^(k_i))."""
    sign = sign_plus if eps == 0 else sign_minus
    power = 1 + 2 * eps
    total = [Fraction(0)] * (nmax + 1)
    for s in range(m + 1):
        def coupling(ks, s=s):
            chosen = ks[0]
            return 4 ** s * _product(chosen, power) * squared_differences(chosen) * inner(chosen)

        weights = enumerate_weighted([SlotBlock(s, sign=sign)], coupling, nmax)
        total = [a + b for a, b in zip(total, weights)]
    return total


def _sst(eps: int, m: int, nmax: int) -> List[Fraction]:
    return milne_sum(eps, m, nmax, lambda ks: correlation_at_squares(eps, len(ks), m, ks))


def _mt(eps: int, m: int, nmax: int) -> List[Fraction]:
    prefactor = milne_prefactor(eps, m)
    return milne_sum(eps, m, nmax, lambda ks: prefactor * milne_schur_weight(eps, m, ks))


# The 2m^2 squares formula

def hsf_terms(m: int) -> List[Tuple[int, int, int]]:
    """Index triples (s0, s1, s2) with s0 + 2 s1 <= m and s2 <= s1."""
    return [(s0, s1, s2)
            for s0 in range(m + 1)
            for s1 in range((m - s0) // 2 + 1)
            for s2 in range(s1 + 1)]


def hsf_prefactor(m: int, s0: int, s1: int, s2: int) -> Fraction:
    a, b = s0 + 2 * s1, s0 + 2 * s2
    sign = -1 if ((m + 1) * (s1 + s2)) % 2 else 1
    doubling = 1 if s1 == s2 else 2
    exponent = (s0 + s1 + s2) * (2 * m + 1) - (a * a + b * b) // 2
    value = sign * doubling * Fraction(2) ** exponent
    for i in range(1, a + 1):
        value /= factorial(m - i)
    for i in range(1, b + 1):
        value /= factorial(m - i)
    return value


def _hsf_term(m: int, s0: int, s1: int, s2: int, nmax: int) -> List[Fraction]:
    eps = (m - s0) % 2
    t0 = s0 // 2
    t1 = (m - s0 - 2 * s1) // 2
    t2 = (m - s0 - 2 * s2) // 2
    blocks = [
        SlotBlock(t0, l_parity=1, sign=sign_odd_l),
        SlotBlock(s0 - t0, l_parity=1, sign=sign_odd_l),
        SlotBlock(s1, l_parity=0, sign=sign_even_l),
        SlotBlock(s2, l_parity=0, sign=sign_even_l),
    ]

    def coupling(ks):
        first, second, primed, doubly = ks
        value = (_product(first, 2 + 2 * eps) * _product(second, 2 * eps)
                 * _product(primed + doubly, 1 + 2 * eps))
        value *= (squared_differences(first) * squared_differences(second)
                  * squared_differences(primed) * squared_differences(doubly))
        for k in first + second:
            for k2 in primed + doubly:
                value *= k * k - k2 * k2
        if not value:
            return 0
        base = [-k * k for k in first + second]
        left = base + [-k * k for k in primed for _ in range(2)]
        right = base + [-k * k for k in doubly for _ in range(2)]
        return (value
                * schur_type_P(eps, t1, len(left), left, confluent=True)
                * schur_type_P(eps, t2, len(right), right, confluent=True))

    factor = hsf_prefactor(m, s0, s1, s2)
    return [factor * w for w in enumerate_weighted(blocks, coupling, nmax)]


def _hsf(m: int, nmax: int) -> List[Fraction]:
    total = [Fraction(0)] * (nmax + 1)
    for s0, s1, s2 in hsf_terms(m):
        term = _hsf_term(m, s0, s1, s2, nmax)
        total = [a + b for a, b in zip(total, term)]
    return total


def _hsf8(nmax: int) -> List[Fraction]:
    even = SlotBlock(1, l_parity=0, sign=sign_even_l)
    odd = SlotBlock(1, l_parity=1, sign=sign_odd_l)
    terms = [
        (16, enumerate_weighted([even], lambda ks: -ks[0][0], nmax)),
        (16, enumerate_weighted([odd], lambda ks: ks[0][0] ** 2, nmax)),
        (64, enumerate_weighted([even, even], lambda ks: ks[0][0] * ks[1][0], nmax)),
        (64, enumerate_weighted([odd, odd], lambda ks: ks[0][0] ** 2, nmax)),
    ]
    values = [sum(c * w[n] for c, w in terms) for n in range(nmax + 1)]
    values[0] = Fraction(1)
    return values


def _hsf18(nmax: int, cross_factors: bool = False) -> List[Fraction]:
    """The seven-term 18-squares expansion.

    As displayed, the (1,1,0) and (1,1,1) terms carry no cross factors; the general
    2m^2-squares theorem gives them (k^2 - k'^2) and (k^2 - k'^2)(k^2 - k''^2).
    """
    even = SlotBlock(1, l_parity=0, sign=sign_even_l)
    odd = SlotBlock(1, l_parity=1, sign=sign_odd_l)
    odd_pair = SlotBlock(2, l_parity=1, sign=sign_odd_l)
    half = Fraction(1, 2)

    def cross(k, *others):
        if not cross_factors:
            return 1
        return _product([k * k - o * o for o in others])

    def mixed(ks):
        k, kp = ks[0][0], ks[1][0]
        return -(k * k + half) * cross(k, kp) * kp

    def triple(ks):
        k, kp, kpp = ks[0][0], ks[1][0], ks[2][0]
        return cross(k, kp, kpp) * kp * kpp

    terms = [
        (2 ** 5, enumerate_weighted([even], lambda ks: ks[0][0] ** 3, nmax)),
        (2 ** 4, enumerate_weighted([odd], lambda ks: (ks[0][0] ** 2 + half) ** 2, nmax)),
        (2 ** 8, enumerate_weighted([even, even], lambda ks: ks[0][0] ** 3 * ks[1][0] ** 3, nmax)),
        (2 ** 8, enumerate_weighted([odd, even], mixed, nmax)),
        (2 ** 8, enumerate_weighted([odd, odd], lambda ks: ks[0][0] ** 4 * ks[1][0] ** 2, nmax)),
        (2 ** 10, enumerate_weighted([odd, even, even], triple, nmax)),
        (2 ** 10, enumerate_weighted(
            [odd, odd_pair], lambda ks: ks[0][0] ** 2 * squared_differences(ks[1]), nmax)),
    ]
    values = [sum(c * w[n] for c, w in terms) for n in range(nmax + 1)]
    values[0] = Fraction(1)
    return values


_FORMULAS: Dict[str, Callable[[Optional[int], int], List[Fraction]]] = {
    'kmt1': _kmt1,
    'kmt2': _kmt2,
    'gm': _gm,
    'hti': _hti,
    'milne16': lambda m, nmax: _milne16(nmax),
    'sst_sq': lambda m, nmax: _sst(0, m, nmax),
    'sst_oct': lambda m, nmax: _sst(1, m, nmax),
    'mt_sq': lambda m, nmax: _mt(0, m, nmax),
    'mt_oct': lambda m, nmax: _mt(1, m, nmax),
    'hsf': _hsf,
    'hsf8': lambda m, nmax: _hsf8(nmax),
    'hsf18': lambda m, nmax: _hsf18(nmax),
    'hsf18_amended': lambda m, nmax: _hsf18(nmax, cross_factors=True),
}


@lru_cache(maxsize=128)
def _formula_counts(tag: str, m: Optional[int], nmax: int) -> Tuple[Count, ...]:
    if tag in DIVISOR_FORMULAS:
        values = [divisor_count(tag, n) for n in range(nmax + 1)]
    else:
        values = _FORMULAS[tag](m, nmax)
    return tuple(_integral(v) for v in values)


def formula_counts(tag: str, m: Optional[int] = None, nmax: int = 100) -> List[Count]:
    """Values of a counting formula for n = 0..nmax.

    Args:
        tag: catalog tag of the formula
        m: family parameter, required for the parameterized formulas
        nmax: last n

    Returns:
        ints where the formula produced integers; a non-integral Fraction is returned as is
    """
    check_range(tag, m, nmax)
    if tag not in M_RANGES:
        m = None
    logger.debug(f"formula_counts {tag} m={m} up to n={nmax}")
    return list(_formula_counts(tag, m, nmax))


def count_via_formula(tag: str, m: Optional[int], n: int) -> Count:
    if n < 0:
        raise UnsupportedRange(f"n must be non-negative, got {n}")
    return formula_counts(tag, m, n)[n]


def oracle_counts(tag: str, m: Optional[int], nmax: int) -> List[int]:
    """Brute-force representation counts the formula is compared against."""
    check_range(tag, m, nmax)
    kind, summands = oracle_target(tag, m)
    return rep_counts(kind, summands, nmax)
