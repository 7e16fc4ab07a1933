"""
Report builder tests
"""

import json

import pytest

from src.core.exceptions import TruncationTooSmall
from src.core.series import QSeries
from src.identities.reports import Discrepancy, format_rat, merge, sequence_report, series_report


def test_series_report_pass():
    squares = QSeries.from_q_coefficients([1, 2, 0, 0, 2], 4)
    report = series_report('sq', {'order': 4}, squares, squares, 4)
    assert report.passed
    assert report.checked_upto == 4
    assert report.note is None


def test_series_report_first_mismatch_in_q():
    lhs = QSeries.from_q_coefficients([1, 2, 0, 0, 2], 4)
    rhs = QSeries.from_q_coefficients([1, 2, 0, 1, 2], 4)
    report = series_report('sq', {'order': 4}, lhs, rhs, 4)
    assert report.status == 'fail'
    assert report.first_discrepancy == Discrepancy(at=3, lhs='0/1', rhs='1/1')


def test_series_report_refuses_order_beyond_sides():
    short = QSeries.from_q_coefficients([1, 2, 0], 2)
    longer = QSeries.from_q_coefficients([1, 2, 0, 0, 2], 4)
    with pytest.raises(TruncationTooSmall):
        series_report('sq', {'order': 4}, short, longer, 4)


def test_series_report_in_u():
    lhs = QSeries([1, 1, 0], 2)
    with pytest.raises(TruncationTooSmall):
        series_report('half', {'order': 3}, lhs, lhs, 3, unit='u')
    assert series_report('half', {'order': 2}, lhs, lhs, 2, unit='u').checked_upto == 2


def test_sequence_report_indexes_from_start():
    report = sequence_report('s2', {'nmax': 3}, [4, 4, 0], [4, 4, 1], start=1)
    assert report.first_discrepancy.at == 3
    assert report.checked_upto == 3


def test_merge_keeps_first_failure():
    good = sequence_report('a', {}, [1], [1])
    bad = sequence_report('b', {}, [1, 2], [1, 3])
    merged = merge('ab', {}, [good, bad])
    assert merged.id == 'ab'
    assert merged.first_discrepancy.at == 2


def test_format_rat():
    assert format_rat(3) == '3/1'
    assert format_rat(-0.5) == '-1/2'


def test_note_only_serialized_when_set():
    plain = sequence_report('s2', {'nmax': 1}, [4], [4])
    assert set(json.loads(plain.model_dump_json())) == {'id', 'params', 'checked_upto', 'status',
                                                        'first_discrepancy'}
    noted = plain.model_copy(update={'note': 'restated'})
    assert json.loads(noted.model_dump_json())['note'] == 'restated'
