"""
Command line tests: exit codes, output formats and option precedence
"""

import json
from fractions import Fraction

import pytest

from src import cli
from src.identities.catalog import CATALOG
from src.identities.reports import Discrepancy, VerifyReport

pytestmark = pytest.mark.usefixtures('clean_env')


def json_lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


class TestVerify:
    def test_unknown_identity(self, capsys):
        assert cli.main(['verify', 'bogus_id']) == cli.EXIT_ERROR
        assert capsys.readouterr().out == ''

    def test_glob_with_family_parameter(self, capsys):
        assert cli.main(['verify', 'mhd_*', '--m', '2', '--order', '10']) == cli.EXIT_PASS
        reports = json_lines(capsys.readouterr().out)
        assert [r['id'] for r in reports] == ['mhd_sq', 'mhd_oct']
        assert all(r['params'] == {'m': 2, 'order': 10} for r in reports)
        assert all(r['status'] == 'pass' and r['first_discrepancy'] is None for r in reports)

    def test_printed_eighteen_squares_display_fails_the_run(self, capsys):
        assert cli.main(['verify', 'hsf', '--m', '3', '--nmax', '4']) == cli.EXIT_FAIL
        printed, amended, full = json_lines(capsys.readouterr().out)
        assert (printed['id'], printed['status']) == ('hsf18', 'fail')
        assert printed['first_discrepancy'] == {'at': 3, 'lhs': '6144/1', 'rhs': '6528/1'}
        assert 'note' not in printed
        assert amended['status'] == 'pass' and amended['note']
        assert full['status'] == 'pass'

    def test_order_from_environment(self, capsys, clean_env):
        clean_env.setenv('ELLIPSUM_ORDER', '7')
        assert cli.main(['verify', 'jtp']) == cli.EXIT_PASS
        [report] = json_lines(capsys.readouterr().out)
        assert report['params']['order'] == 7

    def test_flag_beats_environment(self, capsys, clean_env):
        clean_env.setenv('ELLIPSUM_ORDER', '7')
        assert cli.main(['verify', 'jtp', '-N', '5']) == cli.EXIT_PASS
        [report] = json_lines(capsys.readouterr().out)
        assert report['params']['order'] == 5

    def test_row_default_without_flag_or_environment(self, capsys):
        assert cli.main(['verify', 'qp']) == cli.EXIT_PASS
        [report] = json_lines(capsys.readouterr().out)
        assert report['params']['order'] == 30

    def test_csv_output(self, capsys):
        assert cli.main(['verify', 's2', '--nmax', '20', '--format', 'csv']) == cli.EXIT_PASS
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == ','.join(cli.VERIFY_HEADER)
        assert lines[1].startswith('s2,')
        assert lines[1].endswith(',20,pass,,,')

    def test_text_output(self, capsys):
        assert cli.main(['verify', 'spe', '--format', 'text']) == cli.EXIT_PASS
        assert capsys.readouterr().out.startswith('PASS  spe')

    def test_points_flag(self, capsys):
        assert cli.main(['verify', 'eep', '--points', '1/2,3', '--order', '6']) == cli.EXIT_PASS
        [report] = json_lines(capsys.readouterr().out)
        assert report['params']['points'] == ['1/2', '3/1']

    @pytest.mark.parametrize('argv', [
        ['verify', 'jtp', '--order', '0'],
        ['verify', 'mhd_sq', '--m', '9'],
        ['verify', 'eep', '--points', '1,x'],
        ['verify', 'eep', '--points', '1,2,3'],
    ])
    def test_invalid_options(self, argv, capsys):
        assert cli.main(argv) == cli.EXIT_ERROR
        assert capsys.readouterr().out == ''

    def test_unknown_format_rejected_by_parser(self):
        with pytest.raises(SystemExit):
            cli.main(['verify', 'jtp', '--format', 'xml'])

    def test_worker_count_does_not_change_output(self, capsys):
        argv = ['verify', 's2', 's4', 'jtp', 'mhd_sq', '--nmax', '60', '--order', '10']
        assert cli.main(argv + ['--jobs', '1']) == cli.EXIT_PASS
        serial = capsys.readouterr().out
        assert cli.main(argv + ['--jobs', '2']) == cli.EXIT_PASS
        assert capsys.readouterr().out == serial

    def test_failure_exit_code(self, monkeypatch, capsys):
        failing = VerifyReport(id='jtp', params={'order': 3}, checked_upto=3, status='fail',
                               first_discrepancy=Discrepancy(at=2, lhs='1/1', rhs='2/1'))
        monkeypatch.setattr(cli, 'iter_reports', lambda jobs, workers: iter([failing]))
        assert cli.main(['verify', 'jtp', '--format', 'text']) == cli.EXIT_FAIL
        assert 'first mismatch at 2: 1/1 != 2/1' in capsys.readouterr().out


class TestCount:
    def test_oracle_only_csv(self, capsys):
        assert cli.main(['count', 'squares', '4', '--nmax', '5', '--format', 'csv']) == cli.EXIT_PASS
        assert capsys.readouterr().out.splitlines() == [
            'n,oracle,formula,match',
            '1,8,,', '2,24,,', '3,32,,', '4,24,,', '5,48,,',
        ]

    def test_with_divisor_formula(self, capsys):
        assert cli.main(['count', 'triangles', '4', '--using', 't4', '--nmax', '6', '--format', 'csv']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[1] == '1,4,4,true'
        assert all(line.endswith(',true') for line in lines[1:])

    def test_with_parameterized_formula(self, capsys):
        assert cli.main(['count', 'squares', '16', '--using', 'mt_sq', '--m', '2', '--nmax', '3']) == 0
        rows = json.loads(capsys.readouterr().out)
        assert [(r['oracle'], r['formula'], r['match']) for r in rows] == [
            (32, 32, True), (480, 480, True), (4480, 4480, True)]

    @pytest.mark.parametrize('argv', [
        ['count', 'cubes', '4'],
        ['count', 'squares', '0'],
        ['count', 'squares', '4', '--nmax', '0'],
        ['count', 'squares', '4', '--nmax', '2001'],
        ['count', 'squares', '8', '--using', 't8'],
        ['count', 'squares', '16', '--using', 'mt_sq', '--m', '1'],
        ['count', 'squares', '4', '--using', 'jtp'],
        ['count', 'squares', '16', '--using', 'mt_sq'],
        ['count', 'squares', '64', '--using', 'mt_sq', '--m', '4'],
    ])
    def test_invalid(self, argv):
        assert cli.main(argv) == cli.EXIT_ERROR

    def test_count_table_rows(self):
        rows = cli.count_table('triangles', 2, 3)
        assert rows == [
            {'n': 1, 'oracle': 2, 'formula': None, 'match': None},
            {'n': 2, 'oracle': 1, 'formula': None, 'match': None},
            {'n': 3, 'oracle': 2, 'formula': None, 'match': None},
        ]


class TestTable:
    def test_json_filter(self, capsys):
        assert cli.main(['table', '--tag', 'hsf']) == cli.EXIT_PASS
        [entry] = json.loads(capsys.readouterr().out)
        assert entry['id'] == 'hsf'
        assert entry['ranges']['m'] == [1, 3]

    def test_csv(self, capsys):
        assert cli.main(['table', '--tag', 'mt_*', '--format', 'csv']) == cli.EXIT_PASS
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == ','.join(cli.TABLE_HEADER)
        assert [line.split(',')[0] for line in lines[1:]] == ['mt_sq', 'mt_oct']

    def test_unknown_tag(self):
        assert cli.main(['table', '--tag', 'zz*']) == cli.EXIT_ERROR


def test_parse_points():
    assert cli.parse_points('2, 3,1/2') == (Fraction(2), Fraction(3), Fraction(1, 2))
    assert cli.parse_points(None) is None


def test_full_catalog_listing(capsys):
    assert cli.main(['table', '--catalog', '--format', 'text']) == cli.EXIT_PASS
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 2 * len(CATALOG)
    assert lines[1].strip().startswith('anchor: "')
