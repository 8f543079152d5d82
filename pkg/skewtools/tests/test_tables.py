import pytest

from skewtools.conversions import parse_poly
from skewtools.tables import (
    TABLE_IDS,
    TABLES,
    choose_factors,
    derive_factors,
    frobenius_context,
    stated_factors,
    verify_remark,
    verify_table,
)


def _check_rows(report):
    for row in report['rows']:
        assert row['observed'] == row['expected']
        assert row['mds']
        assert row['match']
    assert report['passed']


def test_table_ids():
    """Tests that every table names a known factor kind and valid rows."""
    assert 'remark' in TABLE_IDS
    for table in TABLES.values():
        assert table['kind'] in ['linear', 'quadratic']
        for row in table['rows']:
            assert max(row['factors']) < len(table['stated'])


def test_stated_factors_shape():
    """Tests that stated factors are monic of degree one or two."""
    ctx = frobenius_context(5, 5)
    for table_id in ['cyclic5', '4']:
        table = TABLES[table_id]
        degree = 1 if table['kind'] == 'linear' else 2
        for f in stated_factors(table, ctx):
            assert f.degree == degree
            assert f.is_monic()


def test_derive_factors():
    """Tests that peeled factors recompose to x^5 - 1 over F_{5^5}."""
    ctx = frobenius_context(5, 5)
    table = TABLES['cyclic5']
    factors = derive_factors(table, ctx)
    assert factors is not None
    assert len(factors) == 5
    product = ctx.one
    for f in factors:
        product = product * f
    assert product == parse_poly(table['modulus'], ctx)


def test_choose_factors_derived():
    """Tests that forcing derived factors reports the derived source."""
    ctx = frobenius_context(5, 5)
    factors, used, recompose = choose_factors(TABLES['cyclic5'], ctx, source='derived')
    assert used == 'derived'
    assert len(factors) == 5
    assert isinstance(recompose, bool)


@pytest.mark.parametrize('source', ['derived', 'stated'])
def test_verify_cyclic5(source):
    """Tests that the x^5 - 1 rows are [5, 3, 3], [5, 2, 4], [5, 2, 4] and MDS."""
    report = verify_table('cyclic5', source=source)
    assert report['table'] == 'cyclic5'
    assert report['source'] == source
    assert len(report['rows']) == 3
    _check_rows(report)


def test_verify_defaults_to_derived():
    """Tests that tables peel their own factors unless asked otherwise."""
    report = verify_table('cyclic5')
    assert report['source'] == 'derived'
    assert isinstance(report['stated_recompose'], bool)


def test_verify_remark():
    """Tests that skew and commutative readings share length and dimension."""
    report = verify_remark()
    assert len(report['rows']) == 2
    for row in report['rows']:
        assert row['k'] == 4
        for name in ['skew', 'commutative']:
            assert 1 <= row['observed'][name] <= 7


def test_verify_errors():
    """Tests unknown tables and factor sources."""
    with pytest.raises(ValueError):
        verify_table('99')
    with pytest.raises(ValueError):
        verify_table('cyclic5', source='guess')


@pytest.mark.slow
@pytest.mark.parametrize('table_id', ['1', '2', '3', '4'])
def test_verify_large_tables(table_id):
    """Tests that peeled factorizations over F_{7^7} and the quadratic one over
    F_{5^5} reproduce every row as an MDS code."""
    report = verify_table(table_id, source='derived')
    assert report['source'] == 'derived'
    _check_rows(report)


@pytest.mark.slow
def test_verify_remark_distances():
    """Tests skew d=7 against commutative d=6 and the reversed pair."""
    report = verify_remark()
    assert [row['observed'] for row in report['rows']] == [
        {'skew': 7, 'commutative': 6},
        {'skew': 6, 'commutative': 7},
    ]
    assert report['passed']
