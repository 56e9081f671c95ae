# Copyright (C) 2026 Mick Krippendorf <m.krippendorf@freenet.de>

__version__ = '0.1.0'
__date__ = '2026-10-19'
__author__ = 'Mick Krippendorf <m.krippendorf@freenet.de>'
__license__ = 'MIT'


__all__ = [
    'build_parser',
    'main',
]


import argparse
import inspect
import json
import logging
import sys
from fractions import Fraction

from .polyring import QuotientRel, normalize, reduce_mod, to_json
from .operators import ParseError, parse_poly
from .stirling import Kind, stirling
from .csys import (
    CONVENTIONS, PointSet, VerificationFailed, build_matrix,
    closed_form_factors, cpoly, cpoly_egf, det_bareiss, det_closed_form,
    residual, solve, verify_counterexample,
)
from .quotient import (
    POLICIES, check_certificates, reduce_set, solve_quotient,
)
from .identities import IDENTITIES
from .sweeps import DRAWS, SEED, SWEEPS, quotient_records, run_sweep, summarize


log = logging.getLogger(__name__)

PROG = 'stirsys'
SCHEMA = 1

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2

FORMATS = ('text', 'json')


def dumps(document):
    return json.dumps(
        {'schema': SCHEMA, **document}, sort_keys=True, separators=(',', ':'))


def emit(args, document, text):
    print(dumps(document) if args.format == 'json' else text)


def verdict(ok):
    return EXIT_OK if ok else EXIT_FALSE


def poly_document(p):
    return {'text': str(p), 'terms': to_json(p)}


def unipoly_document(b):
    return {
        'degree': b.degree,
        'coeffs': [poly_document(c) for c in b.coeffs],
    }


def read_points(args):
    if args.points_file is not None:
        with open(args.points_file) as f:
            return PointSet.from_json(json.load(f))
    if args.points is None:
        raise ValueError('Give a point set with --points or --points-file')
    return PointSet.parse(args.points)


def read_mults(text):
    if text is None:
        return None
    try:
        return [int(each) for each in text.split(',')]
    except ValueError:
        raise ValueError(f'Malformed multiplicities {text!r}') from None


def read_params(text):
    values = []
    for each in text.split(','):
        try:
            values.append(normalize(Fraction(each.strip())))
        except ValueError:
            raise ValueError(f'Malformed parameter {each!r} in {text!r}') from None
    return values


def cmd_stirling(args):
    value = stirling(args.n, args.k, args.kind)
    emit(args, {'kind': args.kind, 'n': args.n, 'k': args.k, 'value': value}, value)
    return EXIT_OK


def cmd_cpoly(args):
    route = cpoly if args.route == 'sum' else cpoly_egf
    p = route(args.k1, args.k2, args.ell)
    emit(args, {'k1': args.k1, 'k2': args.k2, 'ell': args.ell, **poly_document(p)}, p)
    return EXIT_OK


def cmd_matrix(args):
    points = read_points(args)
    ell = len(points) - 1 if args.ell is None else args.ell
    if args.coeffs is not None:
        coeffs = [parse_poly(each) for each in args.coeffs.split(';')]
        leftover = residual(points, coeffs)
        emit(
            args,
            {'points': points.to_json(), 'residual': [poly_document(e) for e in leftover]},
            '\n'.join(map(str, leftover)))
        return verdict(not any(leftover))
    matrix = build_matrix(points, ell)
    text = '\n'.join(
        f'{p.i},{p.j}: ' + ' | '.join(map(str, row))
        for p, row in zip(points, matrix.entries))
    emit(args, {'points': points.to_json(), 'ell': ell, 'rows': matrix.to_json()}, text)
    return EXIT_OK


def cmd_det(args):
    points = read_points(args)
    document = {'points': points.to_json()}
    if args.closed_form:
        det = det_closed_form(points, args.convention)
        if len(points) >= 2:
            prefactor, factors = closed_form_factors(points, args.convention)
            document['prefactor'] = str(prefactor)
            document['factors'] = [str(f) for f in factors]
    else:
        det = det_bareiss(points)
    if args.rel is not None:
        rel = QuotientRel.parse(args.rel)
        det = reduce_mod(det, rel)
        document['rel'] = str(rel)
    document.update(poly_document(det))
    emit(args, document, det)
    return EXIT_OK


def cmd_solve(args):
    points = read_points(args)
    mults = read_mults(args.mults)
    if args.rel is None:
        b = solve(points, mults)
    else:
        b = solve_quotient(points, QuotientRel.parse(args.rel), mults, args.policy)
    emit(args, {'points': points.to_json(), 'solution': unipoly_document(b)}, b)
    return EXIT_OK


def cmd_reduce(args):
    rel = QuotientRel.parse(args.rel)
    if args.poly is not None:
        p = reduce_mod(parse_poly(args.poly), rel)
        emit(args, {'rel': str(rel), **poly_document(p)}, p)
        return EXIT_OK
    result = reduce_set(read_points(args), rel, args.policy)
    document = result.to_json()
    lines = [f'reduced set: {result.reduced_set}']
    lines.extend(
        'class: ' + ';'.join(f'{p.i},{p.j}' for p in members)
        for members in result.classes)
    lines.extend(
        f'{cert.point.i},{cert.point.j} = '
        + (' + '.join(f'{c} * ({p.i},{p.j})' for p, c in sorted(cert.combination.items()))
           or '0')
        for cert in result.dropped_rows)
    ok = True
    if args.ell is not None:
        ok = check_certificates(result, args.ell)
        document['certificates_hold'] = ok
        lines.append(f'certificates hold at ell={args.ell}: {ok}')
    emit(args, document, '\n'.join(lines))
    return verdict(ok)


def emit_records(args, records):
    records = list(records)
    for record in records:
        emit(args, record.to_json(), record)
    summary = summarize(records)
    emit(args, summary.to_json(), summary)
    log.info('%s', summary)
    return verdict(summary.ok)


def verify_thest(args):
    points = read_points(args)
    b = solve(points, read_mults(args.mults))
    emit(args, {'points': points.to_json(), 'ok': True, 'ell': b.degree}, f'PASS thest {points}')
    return EXIT_OK


def verify_det(args):
    points = read_points(args)
    ok = det_bareiss(points) == det_closed_form(points)
    emit(args, {'points': points.to_json(), 'ok': ok}, f'{"PASS" if ok else "FAIL"} det {points}')
    return verdict(ok)


def verify_counterexample_cmd(args):
    report = verify_counterexample()
    document = {'clauses': report.clauses, 'sign': report.sign, 'ok': bool(report)}
    text = '\n'.join(
        f'{"PASS" if ok else "FAIL"} {clause}' for clause, ok in report.clauses.items())
    emit(args, document, text)
    return verdict(report)


def verify_quotient(args):
    points = read_points(args)
    return emit_records(args, quotient_records(points, QuotientRel.parse(args.rel)))


def verify_identities(args):
    if args.identity is None:
        return emit_records(args, run_sweep('identities'))
    check = IDENTITIES[args.identity]
    params = read_params(args.params) if args.params else []
    try:
        inspect.signature(check).bind(*params)
    except TypeError:
        raise ValueError(
            f'{args.identity} takes parameters {inspect.signature(check)}') from None
    report = check(*params)
    lines = [f'{"PASS" if report else "FAIL"} {report.identity} {report.params}']
    lines.extend(
        f'  {"PASS" if each else "FAIL"} {each.identity}' for each in report.details)
    emit(args, report.to_json(), '\n'.join(lines))
    return verdict(report)


VERIFIERS = {
    'thest': verify_thest,
    'det': verify_det,
    'counterexample': verify_counterexample_cmd,
    'quotient': verify_quotient,
    'identities': verify_identities,
}


def cmd_verify(args):
    return VERIFIERS[args.check](args)


def cmd_sweep(args):
    return emit_records(args, run_sweep(args.name, args.seed, args.draws, args.max_r))


def add_points(parser, required=True):
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument('--points', help='point set as "i,j;i,j;..."')
    group.add_argument('--points-file', help='JSON file holding [[i, j], ...]')


def build_parser():
    parser = argparse.ArgumentParser(
        prog=PROG,
        description='Exact Stirling coefficient systems and their quotients.')
    parser.add_argument('--format', choices=FORMATS, default='text')
    # --format is also accepted after the command name
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument('--format', choices=FORMATS, default=argparse.SUPPRESS)
    parser.add_argument(
        '-v', '--verbose', action='count', default=0,
        help='log progress to stderr (-vv for debugging)')
    commands = parser.add_subparsers(dest='command', required=True)

    p = commands.add_parser('stirling', parents=[output], help='a Stirling number')
    p.add_argument('--kind', type=int, choices=[k.value for k in Kind], default=2)
    p.add_argument('-n', type=int, required=True)
    p.add_argument('-k', type=int, required=True)
    p.set_defaults(func=cmd_stirling)

    p = commands.add_parser('cpoly', parents=[output], help='the polynomial C(k1, k2, ell)')
    p.add_argument('--k1', type=int, required=True)
    p.add_argument('--k2', type=int, required=True)
    p.add_argument('-l', '--ell', type=int, required=True)
    p.add_argument('--route', choices=('sum', 'egf'), default='sum')
    p.set_defaults(func=cmd_cpoly)

    p = commands.add_parser('matrix', parents=[output], help='the matrix M_{R,ell} or a residual')
    add_points(p)
    p.add_argument('-l', '--ell', type=int)
    p.add_argument('--coeffs', help='coefficients a_0;...;a_ell to apply the matrix to')
    p.set_defaults(func=cmd_matrix)

    p = commands.add_parser('det', parents=[output], help='the determinant of M_R')
    add_points(p)
    p.add_argument('--closed-form', action='store_true')
    p.add_argument('--convention', choices=CONVENTIONS, default='rows')
    p.add_argument('--rel', help='reduce modulo "ax+by", "ax-by", "x" or "y"')
    p.set_defaults(func=cmd_det)

    p = commands.add_parser('solve', parents=[output], help='the root-encoded solution')
    add_points(p)
    p.add_argument('--mults', help='multiplicities as "n,n,..." in point order')
    p.add_argument('--rel')
    p.add_argument('--policy', choices=sorted(POLICIES), default='lowest')
    p.set_defaults(func=cmd_solve)

    p = commands.add_parser('reduce', parents=[output], help='reduce a point set or a polynomial')
    add_points(p, required=False)
    p.add_argument('--rel', required=True)
    p.add_argument('--policy', choices=sorted(POLICIES), default='lowest')
    p.add_argument('-l', '--ell', type=int, help='also check the certificates at ell')
    p.add_argument('--poly', help='a polynomial to bring into normal form')
    p.set_defaults(func=cmd_reduce)

    p = commands.add_parser('verify', parents=[output], help='run one check')
    p.add_argument('check', choices=sorted(VERIFIERS))
    add_points(p, required=False)
    p.add_argument('--mults')
    p.add_argument('--rel')
    p.add_argument('--identity', choices=sorted(IDENTITIES))
    p.add_argument('--params', default='', help='identity parameters as "a,b,..."')
    p.set_defaults(func=cmd_verify)

    p = commands.add_parser('sweep', parents=[output], help='run a parameter sweep')
    p.add_argument('name', choices=['all', *SWEEPS])
    p.add_argument('--seed', type=int, default=SEED)
    p.add_argument('--draws', type=int, default=DRAWS)
    p.add_argument('--max-r', type=int)
    p.set_defaults(func=cmd_sweep)

    return parser


def configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(
        stream=sys.stderr, level=level,
        format='%(levelname)s %(name)s: %(message)s')


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    if args.command == 'verify' and args.check == 'quotient' and args.rel is None:
        parser.error('verify quotient needs --rel')
    try:
        return args.func(args)
    except VerificationFailed as exc:
        print(f'{PROG}: verification failed: {exc}', file=sys.stderr)
        return EXIT_FALSE
    except (ParseError, ValueError) as exc:
        print(f'{PROG}: error: {exc}', file=sys.stderr)
        return EXIT_USAGE
