"""
Catalog, job expansion and series identity tests
"""

from fractions import Fraction

import pytest

from src.core.exceptions import InvalidParams, InvalidPoints, UnknownIdentity
from src.identities import series_checks as sc
from src.identities.catalog import (
    CATALOG,
    MAX_ORDER,
    expand_jobs,
    get_identity,
    is_count_formula,
    list_identities,
    points,
    resolve,
    run_job,
    verify_series,
)
from src.identities.reports import Discrepancy


class TestCatalog:
    def test_tags_are_unique(self):
        tags = [row.tag for row in CATALOG]
        assert len(tags) == len(set(tags))
        assert len(tags) >= 40

    def test_every_row_has_an_anchor(self):
        assert all(row.anchor.strip() for row in CATALOG)

    def test_kinds(self):
        assert {row.kind for row in CATALOG} == {'count', 'series', 'exact', 'numeric'}

    def test_list_with_filter(self):
        [entry] = list_identities('hsf')
        assert entry.kind == 'count'
        assert entry.params == {'m': [1, 2, 3], 'nmax': 100}
        assert entry.ranges == {'m': [1, 3], 'nmax': [1, 2000]}

    def test_points_rendered_as_text(self):
        [entry] = list_identities('eep')
        assert entry.params['points'] == ['1,2', '2,3,5,7']

    def test_get_identity(self):
        assert get_identity('jtp').unit == 'q'
        with pytest.raises(UnknownIdentity):
            get_identity('jtp2')

    def test_resolve_keeps_catalog_order(self):
        assert [row.tag for row in resolve(['jtp', 's2'])] == ['s2', 'jtp']
        assert [row.tag for row in resolve(['mhd_*'])] == ['mhd_sq', 'mhd_oct']

    def test_resolve_every_pattern_must_match(self):
        with pytest.raises(UnknownIdentity):
            resolve(['s2', 'nothing*'])

    def test_count_formula_tags(self):
        assert is_count_formula('mt_sq')
        assert is_count_formula('t8')
        assert not is_count_formula('jtp')


class TestExpandJobs:
    def test_list_defaults_are_swept(self):
        jobs = expand_jobs(get_identity('mhd_sq'))
        assert jobs == [('mhd_sq', {'m': m, 'order': 200}) for m in (1, 2, 3)]

    def test_order_precedence(self):
        row = get_identity('jtp')
        assert expand_jobs(row) == [('jtp', {'order': 30})]
        assert expand_jobs(row, default_order=12) == [('jtp', {'order': 12})]
        assert expand_jobs(row, {'order': 5}, default_order=12) == [('jtp', {'order': 5})]

    def test_override_replaces_sweep(self):
        assert expand_jobs(get_identity('opc'), {'m': 2, 'eps': 1}) == [('opc', {'eps': 1, 'm': 2, 'order': 60})]

    def test_unknown_overrides_ignored(self):
        assert expand_jobs(get_identity('spe'), {'m': 3}) == [('spe', {})]

    def test_points_override(self):
        jobs = expand_jobs(get_identity('eep'), {'points': [Fraction(1), Fraction(5)]})
        assert jobs == [('eep', {'order': 40, 'points': (Fraction(1), Fraction(5))})]

    @pytest.mark.parametrize('tag, overrides', [
        ('mhd_sq', {'m': 4}),
        ('jtp', {'order': 0}),
        ('jtp', {'order': MAX_ORDER + 1}),
        ('hsf', {'nmax': 0}),
        ('eep', {'points': points(1, 2, 3)}),
        ('oep', {'points': points(1, 2)}),
    ])
    def test_rejected(self, tag, overrides):
        with pytest.raises(InvalidParams):
            expand_jobs(get_identity(tag), overrides)

    def test_antipodal_points(self):
        with pytest.raises(InvalidPoints):
            expand_jobs(get_identity('eep'), {'points': points(2, -2)})


class TestRunJob:
    def test_classical_count(self):
        [report] = run_job(('s4', {'nmax': 50}))
        assert report.passed
        assert report.checked_upto == 50
        assert report.params == {'nmax': 50}

    def test_hsf_reports_sub_check_first(self):
        reports = run_job(('hsf', {'m': 2, 'nmax': 10}))
        assert [r.id for r in reports] == ['hsf8', 'hsf']
        assert all(r.passed for r in reports)

    def test_hsf_eighteen_squares_display_reported_as_printed(self):
        printed, amended, full = run_job(('hsf', {'m': 3, 'nmax': 5}))
        assert printed.id == 'hsf18'
        assert printed.status == 'fail'
        assert printed.first_discrepancy == Discrepancy(at=3, lhs='6144/1', rhs='6528/1')
        assert amended.id == 'hsf18_amended'
        assert amended.passed
        assert 'cross factors' in amended.note
        assert full.id == 'hsf'
        assert full.passed

    def test_series_row(self):
        [report] = run_job(('mhd_oct', {'m': 1, 'order': 15}))
        assert report.id == 'mhd_oct'
        assert report.params == {'m': 1, 'order': 15}
        assert report.passed


@pytest.mark.parametrize('check', [
    sc.verify_jtp, sc.verify_qp, sc.verify_rp, sc.verify_ol, sc.verify_sp,
    sc.verify_l2, sc.verify_l4, sc.verify_l8, sc.verify_jl, sc.verify_jq,
    sc.verify_sq_split, sc.verify_jacobi8, sc.verify_hsf8_series,
])
def test_theta_level_identities(check):
    report = check(12)
    assert report.passed, report.first_discrepancy


@pytest.mark.parametrize('eps', [0, 1])
@pytest.mark.parametrize('m', [1, 2])
def test_squares_power_forms(eps, m):
    assert sc.verify_mhd(eps, m, 12).passed
    assert sc.verify_opc(eps, m, 12).passed
    assert sc.verify_gcc(eps, m, 10).passed
    assert sc.verify_qss(eps, m, 10).passed


def test_q_norms():
    assert sc.verify_pqn(0, 2, 12).passed
    assert sc.verify_pqn(1, 2, 12).passed


@pytest.mark.parametrize('check, pts', [
    (sc.verify_eep, points(1, 2)),
    (sc.verify_eep, points(2, 3, 5, 7)),
    (sc.verify_oep, points(1, 2, 3)),
    (sc.verify_ep, points(1, 2)),
    (sc.verify_op, points(1, 2, 3)),
    (sc.verify_dfe, points(1, 2)),
    (sc.verify_dfe, points(1, 2, 3)),
    (sc.verify_mdt, points(2, 1)),
    (sc.verify_mdt, points(1, 2, 3)),
])
def test_pfaffian_evaluations(check, pts):
    report = check(pts, 8)
    assert report.passed, report.first_discrepancy


def test_rational_points_accepted():
    assert sc.verify_eep((Fraction(1, 2), Fraction(3)), 8).passed


def test_check_points():
    assert sc.check_points([2, Fraction(1, 3)]) == [Fraction(2), Fraction(1, 3)]
    with pytest.raises(InvalidPoints):
        sc.check_points([0, 1])
    with pytest.raises(InvalidPoints):
        sc.check_points([1, 1])
    assert sc.check_points([1, -1], antipodal=False) == [1, -1]


def test_verify_series_by_tag():
    [report] = verify_series('l4', order=60)
    assert report.passed
    assert report.params == {'order': 60}


def test_verify_series_with_points():
    [report] = verify_series('mdt_even', {'points': points(2, 1)}, order=10)
    assert report.id == 'mdt_even'
    assert report.passed


def test_verify_series_sweeps_unset_defaults():
    reports = verify_series('mhd_oct', order=8)
    assert [r.params['m'] for r in reports] == [1, 2, 3]


@pytest.mark.slow
@pytest.mark.parametrize('check', [
    sc.verify_l2, sc.verify_l4, sc.verify_l8, sc.verify_jl, sc.verify_jq, sc.verify_sq_split,
])
def test_lambert_forms_to_order_400(check):
    report = check(400)
    assert report.passed, report.first_discrepancy
    assert report.checked_upto == 400


@pytest.mark.slow
@pytest.mark.parametrize('eps', [0, 1])
@pytest.mark.parametrize('m', [1, 2, 3])
def test_hankel_squares_forms_to_order_200(eps, m):
    report = sc.verify_mhd(eps, m, 200)
    assert report.passed, report.first_discrepancy
    assert report.checked_upto == 200


def test_reports_carry_the_requested_tag():
    reports = verify_series('opc', {'m': 1}, order=6)
    assert [r.id for r in reports] == ['opc', 'opc']
    assert [r.params for r in reports] == [{'eps': 0, 'm': 1, 'order': 6}, {'eps': 1, 'm': 1, 'order': 6}]
