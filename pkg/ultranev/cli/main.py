"""
    Command-line front end.

        ultranev check-m P Q
        ultranev verdict P Q --setting entire|disk|mero-k|mero-disk|...|all
        ultranev nev LITERAL [--at t]
        ultranev theorem-n F --alpha a --alpha b
        ultranev zeros SERIES --at t [--open]
        ultranev fixture NAME

    Exit codes: 0 Yes / RuledOut / holds, 1 No / violated / fixture
    mismatch, 2 inconclusive, 3 invalid input.
"""
import argparse
import json
import logging
import re
import sys

from ultranev.algebra.parser import parse_element, parse_poly, parse_ratmap
from ultranev.algebra.poly import P_ROLE, Q_ROLE
from ultranev.cli.config import FORMATS, RunConfig
from ultranev.cli.fixtures import fixture_names, load_fixture, run_fixture
from ultranev.cli.report import bundle_rows, render
from ultranev.decomp.condition import NO, YES, check_condition_M
from ultranev.decomp.verdict import SETTINGS, verdict, verdict_all
from ultranev.errors import UltranevError
from ultranev.nevanlinna.bundle import (nev_evaluate, nev_from_divisor,
                                        nev_from_mero)
from ultranev.nevanlinna.checks import (HOLDS_EVENTUALLY, VIOLATED_EVENTUALLY,
                                        check_theorem_N)
from ultranev.series.literal import (is_series_literal, parse_divisor,
                                     parse_function, parse_series)
from ultranev.series.mero import MeroRep
from ultranev.series.newton import CLOSED, OPEN, count_zeros_disk
from ultranev.series.truncseries import series_from_poly, series_truncate
from ultranev.util import format_bound, format_rational, parse_rational

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INCONCLUSIVE = 2
EXIT_INPUT = 3

_DIVISOR_START = re.compile(r'^\s*(?:zero|pole|origin|cert)\b')


def _add_common(parser):
    parser.add_argument('--field', help='field as inline JSON or a JSON file')
    parser.add_argument('--p', type=int, help='residue prime')
    parser.add_argument('--char', type=int, help='characteristic, 0 or p')
    parser.add_argument('--order', type=int, help='truncation order')
    parser.add_argument('--precision', type=int, help='Hensel digits')
    parser.add_argument('--format', choices=FORMATS, help='output format')
    parser.add_argument('--t-start', dest='t_start',
                        help='left end of the Nevanlinna domain')
    parser.add_argument('--tail', help='valuation bound of unknown '
                                       'coefficients of truncated series')
    parser.add_argument('--verbose', action='store_true',
                        help='debug diagnostics on stderr')


def _add_pair(parser):
    parser.add_argument('P', nargs='?', help='rational function P(x)')
    parser.add_argument('Q', nargs='?', help='rational function Q(x)')
    parser.add_argument('--fixture', help='take P, Q and the field from a '
                                          'shipped fixture')
    parser.add_argument('--hints', help='JSON file with a list of candidate '
                                        'roots')
    parser.add_argument('--no-hensel', dest='hensel', action='store_false',
                        help='never approximate roots p-adically')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='ultranev',
        description='Exact non-archimedean Nevanlinna bookkeeping and '
                    'verdicts for P(f) = Q(g)')
    commands = parser.add_subparsers(dest='command', required=True)

    check_m = commands.add_parser('check-m', help='evaluate Condition (M)')
    _add_pair(check_m)
    _add_common(check_m)

    verdict_cmd = commands.add_parser('verdict', help='run a verdict setting')
    _add_pair(verdict_cmd)
    verdict_cmd.add_argument('--setting', default='entire',
                             choices=sorted(SETTINGS) + ['all'])
    _add_common(verdict_cmd)

    nev = commands.add_parser('nev', help='counting functions of a series, '
                                          'rational function or divisor')
    nev.add_argument('literal')
    nev.add_argument('--at', help='also evaluate every function at t')
    nev.add_argument('--truncate', action='store_true',
                     help='read rational functions as truncated series')
    _add_common(nev)

    theorem = commands.add_parser('theorem-n', help='check the second main '
                                                    'theorem for f')
    theorem.add_argument('function')
    theorem.add_argument('--alpha', action='append', default=[],
                         help='target value, repeat for each target')
    theorem.add_argument('--truncate', action='store_true',
                         help='read rational functions as truncated series')
    _add_common(theorem)

    zeros = commands.add_parser('zeros', help='count zeros in a disk')
    zeros.add_argument('series', help='series literal or polynomial')
    zeros.add_argument('--at', required=True, help='log-radius t')
    zeros.add_argument('--open', action='store_true', help='open disk')
    _add_common(zeros)

    fixture = commands.add_parser('fixture', help='run a golden fixture')
    fixture.add_argument('name', choices=fixture_names())
    _add_common(fixture)
    return parser


def _setup_logging(verbose):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(message)s'))
    root = logging.getLogger('ultranev')
    root.handlers[:] = [handler]
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)


def _emit(config, data, rows=None):
    print(render(data, config.output, rows))


def _read_hints(path, field):
    if not path:
        return ()
    try:
        with open(path) as file:
            values = json.load(file)
    except (OSError, json.JSONDecodeError) as err:
        raise ValueError(f'ultranev.cli: cannot read hints {path!r}: {err}')
    return tuple(parse_element(field, str(value)) for value in values)


def _pair(args):
    """
        (config, P, Q, hints) from positional expressions or a fixture.
    """
    if args.fixture:
        fixture = load_fixture(args.fixture)
        config = RunConfig.from_args(args, fixture.field)
        hints = fixture.hints + _read_hints(args.hints, fixture.field)
        return config, fixture.P, fixture.Q, hints
    if args.P is None or args.Q is None:
        raise ValueError('ultranev.cli: P and Q are required without '
                         '--fixture')
    config = RunConfig.from_args(args)
    P = parse_ratmap(config.field, args.P, P_ROLE)
    Q = parse_ratmap(config.field, args.Q, Q_ROLE)
    return config, P, Q, _read_hints(args.hints, config.field)


def _function(config, text, truncate):
    f = parse_function(config.field, text, config.tail_valuation)
    if truncate and f.exact:
        order = config.truncation_order
        f = MeroRep(series_truncate(f.num, order, config.tail_valuation),
                    series_truncate(f.den, order, config.tail_valuation),
                    f.x_power)
    return f


def cmd_check_m(args):
    config, P, Q, hints = _pair(args)
    report = check_condition_M(P, Q, hints, config.precision_digits,
                               args.hensel)
    _emit(config, report.to_json())
    if report.satisfied == YES:
        return EXIT_OK
    return EXIT_NEGATIVE if report.satisfied == NO else EXIT_INCONCLUSIVE


def cmd_verdict(args):
    config, P, Q, hints = _pair(args)
    report = check_condition_M(P, Q, hints, config.precision_digits,
                               args.hensel)
    if args.setting == 'all':
        verdicts = verdict_all(P, Q, report)
    else:
        verdicts = [verdict(P, Q, args.setting, report)]
    data = [v.to_json() for v in verdicts]
    _emit(config, data[0] if len(data) == 1 else data)
    return EXIT_OK if any(v.ruled_out for v in verdicts) else EXIT_INCONCLUSIVE


def cmd_nev(args):
    config = RunConfig.from_args(args)
    text = args.literal
    if not is_series_literal(text) and (not text.strip()
                                        or _DIVISOR_START.match(text)):
        bundle = nev_from_divisor(parse_divisor(text), 1, config.t_start)
    else:
        f = _function(config, text, args.truncate)
        bundle = nev_from_mero(f, config.t_start)
    data = bundle.to_json()
    if args.at is not None:
        data['at'] = {'t': args.at, 'values': nev_evaluate(
            bundle, parse_rational(args.at))}
    rows = bundle_rows(bundle) if args.at is None else None
    _emit(config, data, rows)
    return EXIT_OK


def cmd_theorem_n(args):
    config = RunConfig.from_args(args)
    f = _function(config, args.function, args.truncate)
    alphas = [parse_element(config.field, alpha) for alpha in args.alpha]
    report = check_theorem_N(f, alphas, config.t_start)
    _emit(config, report.to_json())
    if report.verdict == HOLDS_EVENTUALLY:
        return EXIT_OK
    if report.verdict == VIOLATED_EVENTUALLY:
        return EXIT_NEGATIVE
    return EXIT_INCONCLUSIVE


def cmd_zeros(args):
    config = RunConfig.from_args(args)
    if is_series_literal(args.series):
        series = parse_series(config.field, args.series,
                              config.tail_valuation)
    else:
        series = series_from_poly(parse_poly(config.field, args.series))
    t = parse_rational(args.at)
    boundary = OPEN if args.open else CLOSED
    count = count_zeros_disk(series, t, boundary)
    _emit(config, {'series': str(series), 't': format_rational(t),
                   'boundary': boundary, 'count': count,
                   'certified_up_to': format_bound(series.certified_radius())})
    return EXIT_OK


def cmd_fixture(args):
    config = RunConfig.from_args(args)
    result = run_fixture(args.name, config.precision_digits)
    _emit(config, {
        'fixture': result.name,
        'match': not result.mismatches,
        'mismatches': result.mismatches,
        'condition_m': result.report.to_json(),
        'verdicts': [v.to_json() for v in result.verdicts.values()],
    })
    return EXIT_NEGATIVE if result.mismatches else EXIT_OK


COMMANDS = {
    'check-m': cmd_check_m,
    'verdict': cmd_verdict,
    'nev': cmd_nev,
    'theorem-n': cmd_theorem_n,
    'zeros': cmd_zeros,
    'fixture': cmd_fixture,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    _setup_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except (UltranevError, ValueError) as err:
        print(f'error: {err}', file=sys.stderr)
        return EXIT_INPUT


if __name__ == '__main__':
    sys.exit(main())
