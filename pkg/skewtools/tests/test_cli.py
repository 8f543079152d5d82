import json

import pytest

import skewtools.cli
from skewtools.cli import EXIT_MISMATCH, EXIT_OK, EXIT_USAGE, main


def _run(capsys, argv):
    status = main(argv)
    out = capsys.readouterr().out
    return status, json.loads(out) if status != EXIT_USAGE else None


@pytest.mark.parametrize(
    'argv,count',
    [
        (['--p', '7', '--len3', '--s', '1'], 3),
        (['--p', '5', '--len6', '--lambda', '-1'], 4),
        (['--p', '5', '--m', '5', '--theta', '1', '--len3', '--s', '1'], 2),
        (['--ring', '7|2', '--len3'], 3),
    ],
)
def test_factor(capsys, argv, count):
    """Tests that factor prints a certified factorization."""
    status, report = _run(capsys, ['factor'] + argv)
    assert status == EXIT_OK
    assert len(report['factors']) == count
    assert report['certificate']['product']
    assert report['certificate']['coprime']


@pytest.mark.parametrize(
    'argv',
    [
        ['factor', '--ring', '7^x', '--len3'],
        ['factor', '--len3'],
        ['factor', '--p', '7', '--generic'],
        ['factor', '--p', '3', '--len3'],
        ['distance', '--p', '7', '--ambient', 'x^3 - 1', '--gen', 'x + y'],
    ],
)
def test_usage_errors(capsys, argv):
    """Tests that unusable input exits with status 2 and a message."""
    assert main(argv) == EXIT_USAGE
    assert capsys.readouterr().err.startswith('error:')


def test_idempotents(capsys):
    """Tests the CRT report of x^3 - 1 over F_7."""
    status, report = _run(capsys, ['idempotents', '--p', '7', '--len3'])
    assert status == EXIT_OK
    assert len(report['idempotents']) == 3
    assert all(report['certificate'].values())


def test_distance(capsys):
    """Tests the repetition code of length 3."""
    argv = ['distance', '--p', '7', '--ambient', 'x^3 - 1', '--gen', 'x^2 + x + 1']
    status, report = _run(capsys, argv)
    assert status == EXIT_OK
    assert (report['n'], report['k'], report['d']) == (3, 1, 3)
    assert report['mds']


def test_code_info(capsys):
    """Tests that <u> in R_2[x]/(x^2 - 1) over F_3 is reported self-dual."""
    argv = ['code-info', '--p', '3', '--k', '2', '--ambient', 'x^2 - 1', '--gen', 'u']
    status, report = _run(capsys, argv)
    assert status == EXIT_OK
    assert report['cardinality'] == 9
    assert report['profile'] == [0, 2]
    assert report['self_dual']
    assert 'k_dim' not in report


def test_enumerate(capsys):
    """Tests that R_2[x]/(x - 1) has exactly three left ideals."""
    argv = ['enumerate', '--p', '3', '--k', '2', '--f', 'x - 1']
    status, report = _run(capsys, argv)
    assert status == EXIT_OK
    assert report['count'] == 3
    assert sorted(row['cardinality'] for row in report['ideals']) == [1, 3, 9]


def _fake_report(table_id, source='derived', progress=False):
    return {
        'table': table_id,
        'rows': [{'observed': [5, 3, 2], 'expected': [5, 3, 3], 'match': False}],
        'passed': False,
    }


def test_verify_tables_mismatch(capsys, monkeypatch):
    """Tests that a disagreeing row gives status 1."""
    monkeypatch.setattr(skewtools.cli, 'verify_table', _fake_report)
    status, report = _run(capsys, ['verify-tables', '--table', 'cyclic5'])
    assert status == EXIT_MISMATCH
    assert not report['passed']
    assert main(['--format', 'table', 'verify-tables', '--table', '1']) == 1
    assert capsys.readouterr().out.startswith('table 1')
