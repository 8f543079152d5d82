"""Worked examples of skew constacyclic codes and a harness that rebuilds them.

Each table fixes a field with its Conway modulus, the Frobenius twist and a central
binomial (or trinomial) modulus. Rows give a generator as a product of factors of
the modulus and the expected ``[n, k, d]``. Factors are derived by peeling right
divisors; the stated ones are multiplied out as a cross-check and can be used
instead on request.
"""
import logging
import warnings

from .chain_ring import ChainRingParams, RingAutomorphism
from .code_model import AmbientQuotient, LeftIdealCode, polynomial_span_code
from .constants import FIELD_SCAN_CAP, QUADRATIC_SCAN_CAP
from .conversions import parse_element, parse_poly
from .factor_engine import peel_linear_factorization, peel_quadratic_factorization
from .finite_field import FieldParams
from .metrics import is_mds, min_distance
from .skew_poly import SkewPolyRing

logger = logging.getLogger(__name__)

FACTOR_SOURCES = ['derived', 'stated', 'auto']

_X7_2 = [
    '5w^6 + w^5 + 2w^4 + w^3 + 3w^2 + 6w + 2',
    '4w^5 + 4w^3 + w^2 + 1',
    '4w^6 + 6w^4 + w^3 + 6w + 2',
    '5w^6 + 5w^5 + 3w^4 + 5w^3 + 2w^2 + 3w + 2',
    '4w^6 + 6w^5 + 6w^4 + 3w^3 + 2w^2 + 4w + 3',
    '6w^5 + 6w^4 + 2w^3 + 3w^2 + 4w + 6',
    '3w^6 + 2w^5 + 4w^3 + 4w + 2',
]

_X7_4 = [
    '5w^6 + w^4 + 3w + 2',
    'w^6 + 3w^5 + w^4 + 3w^3 + 6w^2 + 2w + 5',
    '3w^6 + w^5 + 4w^4 + 5w^3 + 4w^2 + 3',
    '2w^6 + 4w^5 + 5w^4 + 5w^3 + 4w^2 + 3w + 2',
    '6w^5 + w^4 + w^3 + w^2 + 3w + 4',
    '4w^6 + 3w^5 + 3w^4 + 6w^3 + 2w + 1',
    '6w^6 + w^5 + 6w^4 + 4w^3 + 6',
]

_X7_1 = [
    'w^6 + 3w^5 + 5w^4 + 6w^3 + 5w^2 + 5w + 6',
    'w^6 + w^4 + 4w^2 + 6w',
    '3w^6 + w^5 + 3w^4 + 6w^3 + w^2 + w',
    '3w^5 + w^3 + 3w^2 + 2w + 4',
    '2w^6 + 5w^5 + 6w^4 + 5w^2 + w + 6',
    '5w^6 + 2w^5 + 3w^4 + w^3 + 6w^2 + 3w + 3',
    '2w^6 + 2w^5 + 5w^4 + w^3 + 2w^2 + w + 2',
]

_X5_1 = [
    '4w^4 + 2w^3 + 2w^2 + 4w',
    '2w^4 + 2w^3 + 3w^2 + w + 4',
    '4w^4 + 4w^3 + 3w + 2',
    '2w^4 + w^3 + 4w^2 + 3w + 2',
    '3w^4 + 2w^3 + 4w^2 + 2w + 4',
]

# Tails of the quadratic factors x^2 + t of x^10 + x^5 + 1.
_X10_PLUS = [
    '(4w^4 + 3w^3 + 2w^2 + 3w + 1)x + 3w^3 + 2w^2 + w + 2',
    '(3w^4 + w^3 + 4w^2 + w + 4)x + 4w^4 + w^3 + 3w^2 + 4w + 2',
    '(w^4 + 4w^3 + 4w)x + w^4 + 3w^3 + 3w^2 + w',
    '4x + 2w^4 + w^3 + 4w^2 + 3w',
    '(2w^4 + 4w^3 + 3w + 1)x + 4w^4 + 2w^3 + 2w^2 + 2w + 4',
]

# Tails of the quadratic factors x^2 + t of x^10 - x^5 + 1.
_X10_MINUS = [
    '(4w^3 + 4w + 1)x + 2w^4 + 3w^3 + w^2 + 3w + 3',
    '(2w^4 + 4w^3 + 4w^2 + 2w)x + 4w^4 + w^3 + 4w^2 + 2w + 4',
    '(4w^4 + 2w^3 + 2w^2 + 3)x + 4w^4 + 3w^3 + 2w^2 + 3w',
]


def _rows(spans, expected):
    return [
        {'factors': list(span), 'expected': list(params)}
        for span, params in zip(spans, expected)
    ]


_PREFIX_ROWS = _rows(
    [range(2), range(3), range(4), range(5)],
    [(7, 5, 3), (7, 4, 4), (7, 3, 5), (7, 2, 6)],
)

TABLES = {
    '1': {
        'title': 'x^7 - 2 over F_{7^7}',
        'p': 7,
        'm': 7,
        'modulus': 'x^7 - 2',
        'kind': 'linear',
        'stated': _X7_2,
        'rows': _PREFIX_ROWS,
    },
    '2': {
        'title': 'x^7 - 4 over F_{7^7}',
        'p': 7,
        'm': 7,
        'modulus': 'x^7 - 4',
        'kind': 'linear',
        'stated': _X7_4,
        'rows': _PREFIX_ROWS,
    },
    '3': {
        'title': 'x^7 - 1 over F_{7^7}',
        'p': 7,
        'm': 7,
        'modulus': 'x^7 - 1',
        'kind': 'linear',
        'stated': _X7_1,
        'rows': _PREFIX_ROWS,
    },
    'cyclic5': {
        'title': 'x^5 - 1 over F_{5^5}',
        'p': 5,
        'm': 5,
        'modulus': 'x^5 - 1',
        'kind': 'linear',
        'stated': _X5_1,
        'rows': _rows(
            [range(2), range(3), range(2, 5)],
            [(5, 3, 3), (5, 2, 4), (5, 2, 4)],
        ),
    },
    '4': {
        'title': 'x^10 + x^5 + 1 over F_{5^5}',
        'p': 5,
        'm': 5,
        'modulus': 'x^10 + x^5 + 1',
        'kind': 'quadratic',
        'stated': _X10_PLUS,
        'rows': _rows(
            [range(1), range(2), range(3), range(2, 5)],
            [(10, 8, 3), (10, 6, 5), (10, 4, 7), (10, 4, 7)],
        ),
    },
}

# The same generator read in the skew and the commutative ring.
REMARK = [
    {
        'modulus': 'x^10 + x^5 + 1',
        'kind': 'quadratic',
        'stated': _X10_PLUS,
        'factors': [2, 3, 4],
        'expected': {'skew': 7, 'commutative': 6},
    },
    {
        'modulus': 'x^10 - x^5 + 1',
        'kind': 'quadratic',
        'stated': _X10_MINUS,
        'factors': [0, 1, 2],
        'expected': {'skew': 6, 'commutative': 7},
    },
]

TABLE_IDS = list(TABLES) + ['remark']


def frobenius_context(p, m, theta=1, k=1):
    """``F_{p^m}[x; a -> a^{p^theta}]`` (or over R_k) with the Conway modulus."""
    ring = ChainRingParams(FieldParams(p, m), k)
    return SkewPolyRing(ring, RingAutomorphism(ring, theta))


def stated_factors(table, ctx):
    """The stated factors as monic polynomials of ``ctx``."""
    x = ctx.x
    if table['kind'] == 'linear':
        return [x + parse_element(a, ctx.ring) for a in table['stated']]
    return [x * x + parse_poly(t, ctx) for t in table['stated']]


def _product(ctx, factors):
    out = ctx.one
    for f in factors:
        out = out * f
    return out


def derive_factors(table, ctx, cap=None, progress=False):
    """Peels right divisors of the table modulus."""
    modulus = parse_poly(table['modulus'], ctx)
    if table['kind'] == 'linear':
        return peel_linear_factorization(
            modulus, cap=cap or FIELD_SCAN_CAP, progress=progress
        )
    return peel_quadratic_factorization(
        modulus, cap=cap or QUADRATIC_SCAN_CAP, progress=progress
    )


def choose_factors(table, ctx, source='derived', cap=None, progress=False):
    """Returns ``(factors, source_used, stated_recompose)``.

    By default the factors are peeled from the modulus and the stated factors are
    only multiplied out as a cross-check. With ``source='auto'`` the stated factors
    are used when their product is the modulus; otherwise a warning is issued and
    factors are derived.
    """
    if source not in FACTOR_SOURCES:
        raise ValueError(f'source must be one of {FACTOR_SOURCES}, got {source}.')
    modulus = parse_poly(table['modulus'], ctx)
    stated = stated_factors(table, ctx)
    recompose = _product(ctx, stated) == modulus
    if source == 'stated' or (source == 'auto' and recompose):
        return stated, 'stated', recompose
    if source == 'auto':
        warnings.warn(
            f'The stated factors of {table["modulus"]} do not recompose under the '
            'configured modulus; deriving a factorization instead.'
        )
    elif not recompose:
        logger.info('Stated factors of %s do not recompose.', table['modulus'])
    derived = derive_factors(table, ctx, cap=cap, progress=progress)
    if derived is None:
        raise ValueError(f'{table["modulus"]} could not be peeled completely.')
    return derived, 'derived', recompose


def verify_table(table_id, source='derived', cap=None, progress=False):
    """Rebuilds every row of a table and compares ``[n, k, d]``.

    Args:
        table_id (str): One of ``TABLE_IDS``.
        source (str, optional): ``'derived'`` (default), ``'stated'`` or ``'auto'``
            factors.
        cap (int, optional): Scan cap for derived factorizations.
        progress (bool, optional): Show progress bars.

    Returns:
        dict: ``{'table', 'source', 'stated_recompose', 'rows', 'passed'}``.
    """
    if table_id == 'remark':
        return verify_remark(progress=progress)
    if table_id not in TABLES:
        raise ValueError(f'table_id must be one of {TABLE_IDS}, got {table_id}.')
    table = TABLES[table_id]
    ctx = frobenius_context(table['p'], table['m'])
    ambient = AmbientQuotient(ctx, parse_poly(table['modulus'], ctx))
    factors, used, recompose = choose_factors(
        table, ctx, source=source, cap=cap, progress=progress
    )
    rows = []
    for row in table['rows']:
        generator = _product(ctx, [factors[i] for i in row['factors']])
        code = LeftIdealCode(ambient, [generator])
        params = min_distance(code, progress=progress)
        observed = [params.n, params.k_dim, params.d]
        mds = is_mds(params)
        logger.info('Table %s row %s: %s', table_id, row['factors'], observed)
        rows.append(
            {
                'factors': [i + 1 for i in row['factors']],
                'generator': str(generator),
                'expected': row['expected'],
                'observed': observed,
                'mds': mds,
                'match': observed == row['expected'] and mds,
            }
        )
    return {
        'table': table_id,
        'title': table['title'],
        'source': used,
        'stated_recompose': recompose,
        'rows': rows,
        'passed': all(r['match'] for r in rows),
    }


def verify_remark(progress=False):
    """Compares skew and commutative distances of the same stated generators."""
    skew = frobenius_context(5, 5)
    commutative = SkewPolyRing(skew.ring)
    rows = []
    for entry in REMARK:
        observed = {}
        for name, ctx in [('skew', skew), ('commutative', commutative)]:
            factors = stated_factors(entry, ctx)
            generator = _product(ctx, [factors[i] for i in entry['factors']])
            code = polynomial_span_code(generator, 10)
            params = min_distance(code, progress=progress)
            observed[name] = params.d
            dimension = params.k_dim
        rows.append(
            {
                'modulus': entry['modulus'],
                'factors': [i + 1 for i in entry['factors']],
                'k': dimension,
                'expected': entry['expected'],
                'observed': observed,
                'match': observed == entry['expected'],
            }
        )
    return {
        'table': 'remark',
        'rows': rows,
        'passed': all(r['match'] for r in rows),
    }
