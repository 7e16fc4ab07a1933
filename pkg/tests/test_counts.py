"""
Counting formula tests: every finite (k, l) sum against the brute-force oracle
"""

from fractions import Fraction

import pytest

from src.core.exceptions import InvalidParams, UnknownIdentity, UnsupportedRange
from src.core.oracle import RepKind, divisor_count
from src.identities.counts import (
    COUNT_TAGS,
    FIXED_TAGS,
    M_RANGES,
    count_via_formula,
    formula_counts,
    hsf_prefactor,
    hsf_terms,
    milne_prefactor,
    oracle_counts,
    oracle_target,
)
from src.identities.enumeration import (
    SlotBlock,
    enumerate_weighted,
    sign_plus,
    squared_differences,
)


def assert_matches_oracle(tag, m, nmax):
    assert formula_counts(tag, m, nmax)[1:] == oracle_counts(tag, m, nmax)[1:]


@pytest.mark.parametrize('tag', ['s2', 's4', 's8', 't2', 't4', 't8', 'milne16', 'hsf8', 'hsf18_amended'])
def test_fixed_formulas(tag):
    assert_matches_oracle(tag, None, 60)


def test_eighteen_squares_display_as_printed_misses_at_three():
    printed = formula_counts('hsf18', nmax=3)
    amended = formula_counts('hsf18_amended', nmax=3)
    oracle = oracle_counts('hsf18', None, 3)
    assert printed[1:3] == oracle[1:3]
    assert (printed[3], oracle[3]) == (6144, 6528)
    assert amended[3] == 6528


@pytest.mark.parametrize('tag, m, nmax', [
    ('kmt1', 1, 60),
    ('kmt1', 2, 40),
    ('kmt2', 1, 60),
    ('kmt2', 2, 40),
    ('gm', 1, 40),
    ('gm', 2, 40),
    ('gm', 3, 20),
    ('hti', 1, 60),
    ('hti', 2, 40),
    ('sst_sq', 1, 40),
    ('sst_sq', 2, 30),
    ('sst_oct', 1, 40),
    ('sst_oct', 2, 20),
    ('mt_sq', 1, 40),
    ('mt_sq', 2, 30),
    ('mt_oct', 1, 40),
    ('mt_oct', 2, 20),
    ('hsf', 1, 60),
    ('hsf', 2, 40),
])
def test_parameterized_formulas(tag, m, nmax):
    assert_matches_oracle(tag, m, nmax)


@pytest.mark.slow
@pytest.mark.parametrize('tag', ['hti', 'sst_sq', 'sst_oct', 'mt_sq', 'mt_oct', 'hsf'])
def test_largest_family_member(tag):
    assert_matches_oracle(tag, 3, 40)


@pytest.mark.slow
@pytest.mark.parametrize('tag', ['sst_sq', 'sst_oct', 'mt_sq', 'mt_oct'])
@pytest.mark.parametrize('m', [1, 2, 3])
def test_schur_and_correlation_forms_to_one_hundred(tag, m):
    assert_matches_oracle(tag, m, 100)


@pytest.mark.slow
@pytest.mark.parametrize('m', [2, 3])
def test_new_formula_to_one_hundred(m):
    assert_matches_oracle('hsf', m, 100)


@pytest.mark.slow
def test_two_squares_case_of_the_new_formula():
    assert formula_counts('hsf', 1, 500)[1:] == [divisor_count('s2', n) for n in range(1, 501)]


def test_sixteen_squares_reads_like_milne_display():
    single = enumerate_weighted([SlotBlock(1, sign=sign_plus)], lambda ks: ks[0][0] * (1 + ks[0][0] ** 2 + ks[0][0] ** 4), 5)
    double = enumerate_weighted([SlotBlock(2, sign=sign_plus)], lambda ks: ks[0][0] * ks[0][1] * squared_differences(ks[0]), 5)
    values = formula_counts('milne16', nmax=5)
    assert values[1] == Fraction(32, 3) * single[1] + Fraction(256, 3) * double[1] == 32


def test_count_via_formula():
    assert count_via_formula('s2', None, 5) == 8
    assert count_via_formula('t4', None, 1) == 4
    assert count_via_formula('mt_sq', 2, 1) == 32


def test_formula_values_are_integers():
    assert all(isinstance(v, int) for v in formula_counts('mt_oct', 1, 30)[1:])


def test_oracle_targets():
    assert oracle_target('mt_sq', 2) == (RepKind.SQUARES, 16)
    assert oracle_target('kmt2', 1) == (RepKind.TRIANGLES, 8)
    assert oracle_target('hsf', 3) == (RepKind.SQUARES, 18)
    assert oracle_target('t8') == (RepKind.TRIANGLES, 8)


def test_range_errors():
    with pytest.raises(UnknownIdentity):
        formula_counts('s3', None, 10)
    with pytest.raises(InvalidParams):
        formula_counts('gm', None, 10)
    with pytest.raises(UnsupportedRange):
        formula_counts('kmt1', 3, 10)
    with pytest.raises(UnsupportedRange):
        count_via_formula('s2', None, -1)


def test_tag_sets():
    assert set(COUNT_TAGS) == set(M_RANGES) | set(FIXED_TAGS)
    assert M_RANGES['hsf'] == 3


def test_milne_prefactor_small_cases():
    assert milne_prefactor(0, 1) == 2
    assert milne_prefactor(1, 1) == 4


def test_hsf_index_triples():
    assert hsf_terms(1) == [(0, 0, 0), (1, 0, 0)]
    assert (0, 1, 1) in hsf_terms(2)
    assert hsf_prefactor(1, 1, 0, 0) == 4
