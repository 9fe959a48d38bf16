"""
    Golden fixtures shipped with the package: expressions, field and the
    exact values the engine must reproduce.
"""
import json
import logging
import os
from collections import namedtuple

from ultranev.algebra.field import FieldSpec
from ultranev.algebra.parser import parse_element, parse_ratmap
from ultranev.algebra.poly import P_ROLE, Q_ROLE
from ultranev.decomp.condition import check_condition_M
from ultranev.decomp.factorization import local_factorizations, theta
from ultranev.decomp.verdict import lambda_class, verdict
from ultranev.util import to_fraction

logger = logging.getLogger(__name__)

Fixture = namedtuple('Fixture', ['name', 'field', 'P', 'Q', 'hints',
                                 'expected', 'description'])
FixtureResult = namedtuple('FixtureResult', ['name', 'mismatches', 'report',
                                             'verdicts'])


def _fixture_dir():
    return os.path.join(os.path.dirname(os.path.dirname(
        os.path.abspath(__file__))), 'fixtures')


def fixture_names():
    return sorted(name[:-len('.json')] for name in os.listdir(_fixture_dir())
                  if name.endswith('.json'))


def load_fixture(name):
    """
        Reads fixtures/<name>.json and parses P, Q and the hints in its
        field.

        :param name str: fixture name without extension
        :return: Fixture
    """
    path = os.path.join(_fixture_dir(), f'{name}.json')
    try:
        with open(path) as file:
            data = json.load(file)
    except OSError:
        raise ValueError(f'ultranev.cli.load_fixture: unknown fixture '
                         f'{name!r}, available: {", ".join(fixture_names())}')
    field = FieldSpec.from_json(data['field'])
    P = parse_ratmap(field, data['P'], P_ROLE)
    Q = parse_ratmap(field, data['Q'], Q_ROLE)
    hints = tuple(parse_element(field, hint) for hint in data.get('hints', []))
    return Fixture(name, field, P, Q, hints, data.get('expected', {}),
                   data.get('description', ''))


def _same_elements(field, expected, actual):
    wanted = sorted(str(parse_element(field, text)) for text in expected)
    return wanted == sorted(str(value) for value in actual)


def compare_fixture(fixture, report, verdicts):
    """
        Lists every expected value the report or the verdicts do not
        reproduce exactly.

        :return: list of mismatch descriptions, empty on success
    """
    expected, field = fixture.expected, fixture.field
    mismatches = []

    def check(key, ok, actual):
        if not ok:
            mismatches.append(f'{key}: expected {expected[key]}, got {actual}')

    if 'condition_m' in expected:
        check('condition_m', report.label == expected['condition_m'],
              report.label)
    if 'k' in expected:
        check('k', report.k == expected['k'], report.k)
    points = [c for c, _ in report.critical_pairs()]
    if 'critical_points' in expected:
        check('critical_points',
              _same_elements(field, expected['critical_points'], points),
              [str(c) for c in points])
    if 'critical_values' in expected:
        check('critical_values',
              _same_elements(field, expected['critical_values'],
                             report.critical_values),
              [str(v) for v in report.critical_values])
    if 'd' in expected:
        found = [check_.d for check_ in report.d_checks]
        check('d', _same_elements(field, expected['d'], found),
              [str(d) for d in found])
    if 'q_values' in expected:
        found = [check_.q_value for check_ in report.d_checks]
        check('q_values', _same_elements(field, expected['q_values'], found),
              [str(q) for q in found])
    if 's' in expected or 'theta' in expected:
        facts = local_factorizations(fixture.P, report)
        s_values = sorted(f.s for f in facts)
        if 's' in expected:
            check('s', s_values == sorted(expected['s']), s_values)
        if 'theta' in expected:
            value = theta(fixture.P, facts)
            check('theta', value == expected['theta'], value)
    if 'lambda' in expected:
        lam = lambda_class(fixture.P, fixture.Q)
        wanted = expected['lambda']
        check('lambda', lam.case == wanted['case']
              and lam.value == to_fraction(wanted['value']),
              {'case': lam.case, 'value': str(lam.value)})
    for setting, conclusion in expected.get('verdicts', {}).items():
        actual = verdicts[setting].conclusion
        if actual != conclusion:
            mismatches.append(f'verdict {setting}: expected {conclusion}, got '
                              f'{verdicts[setting].label}')
    if 'mero_inequality' in expected:
        inequality = verdicts['MeroOnK'].trace.get('inequality') or {}
        wanted = expected['mero_inequality']
        actual = {key: str(inequality.get(key)) for key in ('lhs', 'rhs')}
        check('mero_inequality',
              inequality.get('lhs') == to_fraction(wanted['lhs'])
              and inequality.get('rhs') == to_fraction(wanted['rhs']), actual)
    return mismatches


def run_fixture(name, precision=24):
    """
        Runs Condition (M) and the verdicts named in the fixture.

        :param name str: fixture name
        :return: FixtureResult
    """
    fixture = load_fixture(name)
    report = check_condition_M(fixture.P, fixture.Q, fixture.hints, precision)
    settings = set(fixture.expected.get('verdicts', {}))
    if 'mero_inequality' in fixture.expected:
        settings.add('MeroOnK')
    verdicts = {setting: verdict(fixture.P, fixture.Q, setting, report)
                for setting in sorted(settings)}
    mismatches = compare_fixture(fixture, report, verdicts)
    for mismatch in mismatches:
        logger.warning('ultranev.cli.run_fixture: %s: %s', name, mismatch)
    return FixtureResult(name, mismatches, report, verdicts)
