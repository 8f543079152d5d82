"""Command-line front end: ``skewtools <command> [options]``.

Exit codes are 0 when every check passes, 1 when a rebuilt table row disagrees and
2 for unusable input.
"""
import argparse
import json
import logging
import sys

from .chain_ring import ChainRingParams, RingAutomorphism
from .code_model import (
    AmbientQuotient,
    code_from_generators,
    dual_code,
    enumerate_ideals,
    is_self_dual,
    torsion_profile,
)
from .constants import (
    EXHAUSTIVE_CAP,
    FIELD_SCAN_CAP,
    IDEAL_ENUMERATION_CAP,
    SUBSET_TEST_CAP,
)
from .conversions import (
    census_report,
    code_report,
    crt_report,
    distance_report,
    factorization_report,
    format_table,
    parse_automorphism_spec,
    parse_element,
    parse_field_spec,
    parse_poly,
    parse_ring_spec,
)
from .crt_decomp import build_crt
from .exceptions import Error, SpecParse
from .factor_engine import factor_binomial, factor_length3, factor_length6
from .metrics import METHODS, min_distance
from .skew_poly import SkewPolyRing
from .tables import FACTOR_SOURCES, TABLE_IDS, verify_table

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _add_ring_arguments(parser):
    group = parser.add_argument_group('ring')
    group.add_argument('--ring', help="Ring spec 'p^m[:c_0,...,c_m]|k'.")
    group.add_argument('--p', type=int, help='Characteristic.')
    group.add_argument('--m', type=int, default=1, help='Extension degree.')
    group.add_argument('--k', type=int, default=1, help='Nilpotency index of u.')
    group.add_argument(
        '--modulus', help='Field modulus c_0,...,c_m (default: Conway polynomial).'
    )
    group.add_argument('--auto', help="Automorphism spec 'theta=e;eta=...'.")
    group.add_argument('--theta', type=int, default=0, help='Frobenius exponent.')
    group.add_argument('--eta', help='Unit eta with Theta(u) = eta u.')
    group.add_argument(
        '--cap-scan', type=int, default=FIELD_SCAN_CAP, help='Field scan cap.'
    )


def _add_factor_arguments(parser):
    shape = parser.add_mutually_exclusive_group(required=True)
    shape.add_argument('--len3', dest='shape', action='store_const', const='len3')
    shape.add_argument('--len6', dest='shape', action='store_const', const='len6')
    shape.add_argument(
        '--generic', dest='shape', action='store_const', const='generic'
    )
    parser.add_argument('--n', type=int, help='Base length for --generic.')
    parser.add_argument('--lambda', dest='lam', default='1', help='The unit lambda.')
    parser.add_argument('--s', type=int, default=0, help='Exponent of p in N.')


def _add_code_arguments(parser):
    parser.add_argument(
        '--ambient', required=True, help="Monic central modulus, e.g. 'x^7 - 2'."
    )
    parser.add_argument(
        '--gen', action='append', default=[], help='Generator (repeatable).'
    )


def build_parser():
    parser = argparse.ArgumentParser(
        prog='skewtools',
        description='Skew constacyclic codes over finite chain rings.',
    )
    parser.add_argument(
        '-v', '--verbose', action='count', default=0, help='-v info, -vv debug.'
    )
    parser.add_argument('--format', choices=['json', 'table'], default='json')
    parser.add_argument('--progress', action='store_true', help='Progress bars.')
    commands = parser.add_subparsers(dest='command', required=True)

    factor = commands.add_parser('factor', help='Central coprime factorization.')
    _add_ring_arguments(factor)
    _add_factor_arguments(factor)

    idempotents = commands.add_parser('idempotents', help='CRT idempotents.')
    _add_ring_arguments(idempotents)
    _add_factor_arguments(idempotents)

    info = commands.add_parser('code-info', help='Size, torsion and dual of a code.')
    _add_ring_arguments(info)
    _add_code_arguments(info)

    distance = commands.add_parser('distance', help='Minimum distance.')
    _add_ring_arguments(distance)
    _add_code_arguments(distance)
    distance.add_argument('--method', choices=METHODS)
    distance.add_argument('--cap-exhaustive', type=int, default=EXHAUSTIVE_CAP)
    distance.add_argument('--cap-subsets', type=int, default=SUBSET_TEST_CAP)

    census = commands.add_parser('enumerate', help='All left ideals of R[x]/(f^j).')
    _add_ring_arguments(census)
    census.add_argument('--f', required=True, help='Monic central polynomial f.')
    census.add_argument('--j', type=int, default=1, help='Exponent of f.')
    census.add_argument('--cap-enumerate', type=int, default=IDEAL_ENUMERATION_CAP)

    verify = commands.add_parser('verify-tables', help='Rebuild the worked tables.')
    verify.add_argument('--table', choices=TABLE_IDS + ['all'], default='all')
    verify.add_argument('--source', choices=FACTOR_SOURCES, default='derived')
    return parser


def context_from_args(args):
    """The skew ring described by the ring options."""
    if args.ring:
        ring = parse_ring_spec(args.ring)
    else:
        if args.p is None:
            raise SpecParse('Give --ring or --p.')
        spec = f'{args.p}^{args.m}'
        if args.modulus:
            spec += f':{args.modulus}'
        ring = ChainRingParams(parse_field_spec(spec), args.k)
    if args.auto:
        auto = parse_automorphism_spec(args.auto, ring)
    else:
        eta = None if args.eta is None else parse_element(args.eta, ring)
        auto = RingAutomorphism(ring, args.theta, eta)
    return SkewPolyRing(ring, auto)


def _factorization(args, ctx):
    lam = parse_element(args.lam, ctx.ring)
    if args.shape == 'len3':
        return factor_length3(lam, args.s, ctx, cap=args.cap_scan)
    if args.shape == 'len6':
        return factor_length6(lam, args.s, ctx, cap=args.cap_scan)
    if args.n is None:
        raise SpecParse('--generic needs --n.')
    return factor_binomial(args.n, lam, args.s, ctx, cap=args.cap_scan)


def _code(args, ctx):
    ambient = AmbientQuotient(ctx, parse_poly(args.ambient, ctx))
    gens = [parse_poly(g, ctx) for g in args.gen]
    return code_from_generators(ambient, gens)


def cmd_factor(args):
    ctx = context_from_args(args)
    return factorization_report(_factorization(args, ctx)), EXIT_OK


def cmd_idempotents(args):
    ctx = context_from_args(args)
    return crt_report(build_crt(_factorization(args, ctx))), EXIT_OK


def cmd_code_info(args):
    ctx = context_from_args(args)
    code = _code(args, ctx)
    dual = dual_code(code)
    report = code_report(
        code,
        dual=dual,
        self_dual=is_self_dual(code),
        torsion_profile=torsion_profile(code),
    )
    return report, EXIT_OK


def cmd_distance(args):
    ctx = context_from_args(args)
    params = min_distance(
        _code(args, ctx),
        cap=args.cap_exhaustive,
        subset_cap=args.cap_subsets,
        method=args.method,
        progress=args.progress,
    )
    return distance_report(params, ctx.ring), EXIT_OK


def cmd_enumerate(args):
    ctx = context_from_args(args)
    f = parse_poly(args.f, ctx)
    ambient = AmbientQuotient(ctx, f ** args.j)
    rows = census_report(enumerate_ideals(ambient, cap=args.cap_enumerate))
    report = {'modulus': str(ambient.modulus), 'count': len(rows), 'ideals': rows}
    return report, EXIT_OK


def cmd_verify_tables(args):
    ids = TABLE_IDS if args.table == 'all' else [args.table]
    reports = [
        verify_table(table_id, source=args.source, progress=args.progress)
        for table_id in ids
    ]
    passed = all(r['passed'] for r in reports)
    return {'passed': passed, 'tables': reports}, EXIT_OK if passed else EXIT_MISMATCH


COMMANDS = {
    'factor': cmd_factor,
    'idempotents': cmd_idempotents,
    'code-info': cmd_code_info,
    'distance': cmd_distance,
    'enumerate': cmd_enumerate,
    'verify-tables': cmd_verify_tables,
}


def _render(report, fmt):
    if fmt == 'json':
        return json.dumps(report, indent=2, default=str)
    if 'tables' in report:
        return '\n\n'.join(
            f"table {t['table']}\n{format_table(t['rows'])}" for t in report['tables']
        )
    for key in ['rows', 'ideals', 'factors']:
        if isinstance(report.get(key), list):
            return format_table(report[key])
    return format_table([report])


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    level = [logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)]
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s')
    try:
        report, status = COMMANDS[args.command](args)
    except SpecParse as err:
        print(f'error: {err}', file=sys.stderr)
        return EXIT_USAGE
    except (Error, ValueError) as err:
        print(f'error: {getattr(err, "message", err)}', file=sys.stderr)
        return EXIT_USAGE
    print(_render(report, args.format))
    return status


if __name__ == '__main__':
    sys.exit(main())
