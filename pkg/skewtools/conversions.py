"""Text and JSON formats: field, ring and automorphism specs, polynomial text and
report dictionaries."""
import logging
import re
from tokenize import TokenError

import numpy as np
from sympy import Poly, PolynomialError, Symbol, preorder_traversal
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication_application,
    parse_expr,
    standard_transformations,
)

from .chain_ring import ChainRingElement, ChainRingParams, RingAutomorphism
from .constants import CHAIN_SYMBOL, FIELD_SYMBOL, SKEW_SYMBOL
from .exceptions import NotAUnit, SpecParse
from .finite_field import FieldParams
from .skew_poly import SkewPoly

logger = logging.getLogger(__name__)

TRANSFORMATIONS = standard_transformations + (
    implicit_multiplication_application,
    convert_xor,
)

_X, _U, _W = Symbol(SKEW_SYMBOL), Symbol(CHAIN_SYMBOL), Symbol(FIELD_SYMBOL)
_SYMBOLS = {SKEW_SYMBOL: _X, CHAIN_SYMBOL: _U, FIELD_SYMBOL: _W}

_FIELD_RE = re.compile(r'^\s*(\d+)\s*(?:\^\s*(\d+))?\s*(?::\s*([-\d,\s]+))?$')


def parse_field_spec(text):
    """Parses ``'p'``, ``'p^m'`` or ``'p^m:c_0,...,c_m'`` (modulus low-to-high).

    Examples:
        >>> parse_field_spec('5^5').modulus
        (3, 4, 0, 0, 0, 1)

    Raises:
        SpecParse: On malformed text or an invalid field.
    """
    match = _FIELD_RE.match(text)
    if match is None:
        position = next(
            (i for i, c in enumerate(text) if not (c.isdigit() or c in '^:, -')),
            len(text),
        )
        raise SpecParse('Malformed field spec.', text, position)
    p, m = int(match.group(1)), int(match.group(2) or 1)
    modulus = None
    if match.group(3):
        try:
            modulus = [int(c) for c in match.group(3).split(',')]
        except ValueError:
            raise SpecParse('Malformed modulus.', text, match.start(3))
    try:
        return FieldParams(p, m, modulus)
    except ValueError as err:
        raise SpecParse(str(err), text, 0)


def parse_ring_spec(text):
    """Parses ``'<field spec>|k'``; ``k`` defaults to 1.

    Raises:
        SpecParse: On malformed text.
    """
    field_text, _, k_text = text.partition('|')
    field = parse_field_spec(field_text)
    if not k_text.strip():
        return ChainRingParams(field, 1)
    if not k_text.strip().isdigit() or int(k_text) < 1:
        raise SpecParse('k must be a positive integer.', text, len(field_text) + 1)
    return ChainRingParams(field, int(k_text))


def parse_automorphism_spec(text, ring):
    """Parses ``'theta=e;eta=...'`` or ``'theta=e;eta1=...;eta2=...'``.

    ``eta`` is the unit with ``Theta(u) = eta u``; ``eta_i`` are its unit factors.
    An empty spec is the identity.

    Raises:
        SpecParse: On unknown keys or malformed values.
    """
    theta, eta, factors = 0, None, {}
    offset = 0
    for part in text.split(';'):
        start = offset
        offset += len(part) + 1
        if not part.strip():
            continue
        key, sep, value = part.partition('=')
        key = key.strip()
        value_at = start + len(key) + 1
        if not sep:
            raise SpecParse('Expected key=value.', text, start)
        if key == 'theta':
            try:
                theta = int(value)
            except ValueError:
                raise SpecParse('theta must be an integer.', text, value_at)
        elif key == 'eta':
            eta = _parse_at(parse_element, value, ring, text, value_at)
        elif re.fullmatch(r'eta\d+', key):
            factors[int(key[3:])] = _parse_at(
                parse_element, value, ring, text, value_at
            )
        else:
            raise SpecParse(f'Unknown key {key!r}.', text, start)
    try:
        if factors:
            if eta is not None:
                raise ValueError('Give either eta or eta_i factors, not both.')
            if sorted(factors) != list(range(1, len(factors) + 1)):
                raise ValueError('Factors must be eta1, eta2, ... without gaps.')
            etas = [factors[i] for i in sorted(factors)]
            return RingAutomorphism.from_factors(ring, theta, etas)
        return RingAutomorphism(ring, theta, eta)
    except (ValueError, NotAUnit) as err:
        raise SpecParse(str(err), text, 0)


def _parse_at(parser, value, context, text, position):
    try:
        return parser(value, context)
    except SpecParse as err:
        raise SpecParse(err.message, text, position + err.position)


def _parse_expression(text):
    try:
        expr = parse_expr(
            text, local_dict=dict(_SYMBOLS), transformations=TRANSFORMATIONS
        )
    except (SyntaxError, TokenError, TypeError, ValueError) as err:
        position = getattr(err, 'offset', None) or 1
        raise SpecParse('Cannot parse the expression.', text, position - 1)
    unknown = expr.free_symbols - set(_SYMBOLS.values())
    if unknown:
        name = sorted(str(s) for s in unknown)[0]
        raise SpecParse(f'Unknown symbol {name!r}.', text, max(text.find(name), 0))
    return expr


def _check_left_coefficients(expr, text):
    """Skew products only make sense when at most one factor holds ``x``."""
    for node in preorder_traversal(expr):
        if node.is_Mul:
            holding = [a for a in node.args if _X in a.free_symbols]
            if len(holding) > 1:
                raise SpecParse(
                    'Products of several x-terms are ambiguous; expand them.',
                    text,
                    max(text.find(SKEW_SYMBOL), 0),
                )
        if node.is_Pow and _X in node.base.free_symbols and node.base != _X:
            raise SpecParse(
                'Powers of x-terms are ambiguous; expand them.',
                text,
                max(text.find(SKEW_SYMBOL), 0),
            )


def _ring_coefficients(expr, ring, text):
    """Coefficients (shape ``(k,)``) of a polynomial in ``u`` and ``w``."""
    field = ring.field
    p = field.p
    coeffs = ring.zeros()
    try:
        terms = Poly(expr, _U, _W).terms()
    except PolynomialError:
        raise SpecParse('Not a polynomial in u and w.', text, 0)
    for (i, j), c in terms:
        numerator, denominator = int(c.p), int(c.q)
        if denominator % p == 0:
            raise SpecParse(f'Denominator {denominator} vanishes mod {p}.', text, 0)
        value = numerator * pow(denominator, -1, p) % p
        if i < ring.k and value:
            coeffs[i] = coeffs[i] + value * field.generator ** j
    return coeffs


def parse_element(text, ring):
    """Parses a chain-ring element written in ``u`` and ``w``.

    Examples:
        >>> R = parse_ring_spec('7|2')
        >>> str(parse_element('3 + 2u', R))
        '3 + 2*u'
    """
    expr = _parse_expression(text)
    if _X in expr.free_symbols:
        raise SpecParse('Ring elements cannot contain x.', text, text.find(SKEW_SYMBOL))
    return ChainRingElement(ring, _ring_coefficients(expr, ring, text))


def parse_poly(text, ctx):
    """Parses a skew polynomial. Every coefficient is read as a left coefficient
    ``c x^i``, so products may hold at most one factor containing ``x``.

    Args:
        text (str): E.g. ``'x^2 + (3w + 1)x + 2u'``.
        ctx (SkewPolyRing): Target ring.

    Returns:
        SkewPoly

    Raises:
        SpecParse: On malformed or ambiguous text.
    """
    expr = _parse_expression(text)
    _check_left_coefficients(expr, text)
    try:
        powers = Poly(expr, _X).all_coeffs()[::-1]
    except PolynomialError:
        raise SpecParse('Not a polynomial in x.', text, 0)
    coeffs = ctx.ring.zeros(len(powers))
    for i, c in enumerate(powers):
        coeffs[i] = _ring_coefficients(c, ctx.ring, text)
    return SkewPoly(ctx, coeffs)


def field_spec(field):
    return f'{field.p}^{field.m}:' + ','.join(str(c) for c in field.modulus)


def ring_spec(ring):
    return f'{field_spec(ring.field)}|{ring.k}'


def automorphism_spec(auto):
    if auto.ring.k == 1:
        return f'theta={auto.theta.e}'
    return f'theta={auto.theta.e};eta={auto.eta}'


def format_word(word, ring):
    """Coordinates of a word as ring-element strings."""
    if word.ndim == 1:
        word = word.reshape(-1, 1)
    return [str(ChainRingElement(ring, word[i])) for i in range(word.shape[0])]


def factorization_report(fact):
    return {
        'modulus': str(fact.modulus),
        'case': fact.case_tag,
        'factors': [
            {
                'base': str(entry.base),
                'multiplicity': int(entry.multiplicity),
                'irreducible': entry.irreducible,
            }
            for entry in fact.factors
        ],
        'certificate': fact.certificate(),
    }


def crt_report(system):
    return {
        'modulus': str(system.modulus),
        'blocks': [str(b) for b in system.blocks],
        'idempotents': [str(e) for e in system.idempotents],
        'certificate': system.certificate(),
    }


def code_report(code, dual=None, self_dual=None, torsion_profile=None):
    """Summary of a code: length, size, profile and optionally its dual."""
    report = {
        'length': code.length,
        'cardinality': code.cardinality,
        'profile': list(code.profile()),
        'generators': [str(g) for g in code.generator_polys()],
    }
    if code.is_field_code():
        report['k_dim'] = code.dimension
    if torsion_profile is not None:
        report['torsion_profile'] = list(torsion_profile)
    if dual is not None:
        report['dual_generators'] = [str(g) for g in dual.generator_polys()]
        report['dual_modulus'] = (
            None if dual.ambient is None else str(dual.ambient.modulus)
        )
    if self_dual is not None:
        report['self_dual'] = bool(self_dual)
    return report


def distance_report(params, ring):
    k_dim = params.k_dim
    return {
        'n': params.n,
        'k': int(k_dim) if isinstance(k_dim, (int, np.integer)) else list(k_dim),
        'd': params.d,
        'mds': params.mds,
        'method': params.method,
        'witness': format_word(params.witness, ring),
    }


def census_report(items):
    """Rows for ``enumerate_ideals`` output."""
    rows = []
    for form, code, label in items:
        rows.append(
            {
                'a': [None if a is None else str(a) for a in form.a],
                'r': [[None if r is None else str(r) for r in row] for row in form.r],
                'label': label,
                'cardinality': code.cardinality,
            }
        )
    return rows


def format_table(rows):
    """Aligned text table for a list of flat dicts."""
    if not rows:
        return ''
    headers = list(rows[0])
    cells = [[str(row.get(h, '')) for h in headers] for row in rows]
    widths = [
        max(len(h), *(len(r[i]) for r in cells)) for i, h in enumerate(headers)
    ]
    lines = ['  '.join(h.ljust(w) for h, w in zip(headers, widths))]
    lines.append('  '.join('-' * w for w in widths))
    for r in cells:
        lines.append('  '.join(c.ljust(w) for c, w in zip(r, widths)))
    return '\n'.join(lines)
