from fractions import Fraction

import pytest

from ultranev.algebra import (Q_ROLE, chi_root_poly, frobenius_poly,
                              parse_ratmap, ratmap_frobenius)
from ultranev.cli import load_fixture
from ultranev.decomp import (ANALYTIC_UNBOUNDED_DISK, COR216, DEGREE_PATTERN,
                             ENTIRE_ON_K, MERO_ON_K, MERO_UNBOUNDED_DISK,
                             SETTINGS, THM214, check_condition_M, describe,
                             lambda_class, monotone, trace_conclusion,
                             verdict, verdict_all, verdict_cor216,
                             verdict_degree_pattern, verdict_thm214)
from ultranev.errors import UltranevError, UncoveredDegreePattern
from ultranev.sampling import random_ratmap

QUINTIC_WITH_FOUR_VALUES = 'x^5/5 - 3*x^4/2 + 11*x^3/3 - 3*x^2'


def _pair(field, P, Q):
    return parse_ratmap(field, P), parse_ratmap(field, Q, Q_ROLE)


def _fixture_verdicts(name, *settings):
    fixture = load_fixture(name)
    report = check_condition_M(fixture.P, fixture.Q, fixture.hints)
    return {setting: verdict(fixture.P, fixture.Q, setting, report)
            for setting in settings}


@pytest.mark.parametrize('P, Q, case, value', [
    ('x^2', 'x^2/(x^2 + x + 1)', 1, Fraction(1)),
    ('x^3 - x', '1/(x^2 + 1)', 2, Fraction(3, 2)),
    ('1/(x - 1)^3', 'x^2', 3, Fraction(1)),
    ('x^9/(x - 1)', 'x^2 + 1', 4, Fraction(2)),
    ('1/x^2', '1/(x + 1)', 5, Fraction(1)),
])
def test_lambda_cases(qq5, P, Q, case, value):
    lam = lambda_class(*_pair(qq5, P, Q))
    assert lam.case == case
    assert lam.value == value


def test_lambda_needs_nonzero_numerators(qq5):
    with pytest.raises(UncoveredDegreePattern):
        lambda_class(*_pair(qq5, 'x^2', '0'))


def test_entire_verdicts_of_quadratic():
    verdicts = _fixture_verdicts('quadratic_sqrt3', 'entire', 'disk')
    entire, disk = verdicts['entire'], verdicts['disk']
    assert entire.setting == ENTIRE_ON_K
    assert entire.ruled_out and disk.ruled_out
    assert entire.trace['inequality'] == {'lhs': 2, 'rhs': 0,
                                          'relation': '>='}
    assert trace_conclusion(entire.trace) is True


def test_boundary_case_is_ruled_out_on_k_only():
    verdicts = _fixture_verdicts('double_critical_cubic', 'entire', 'disk')
    entire, disk = verdicts['entire'], verdicts['disk']
    assert entire.ruled_out
    assert disk.label == 'Inconclusive(InequalityConsistent)'
    assert trace_conclusion(disk.trace) is False
    assert monotone(disk, entire)


def test_mero_verdicts():
    verdicts = _fixture_verdicts('x9_over_x_minus_1', 'mero-k', 'mero-disk')
    whole, disk = verdicts['mero-k'], verdicts['mero-disk']
    assert whole.ruled_out and disk.ruled_out
    assert whole.trace['inequality']['lhs'] == 14
    assert whole.trace['inequality']['rhs'] == 13
    assert whole.trace['theta'] == 7
    assert whole.trace['gammaW'] == 0
    assert monotone(disk, whole)
    data = whole.to_json()
    assert data['conclusion'] == 'RuledOut'
    assert data['trace']['lambda'] == {'case': 4, 'value': '2'}


def test_theta_zero_is_inconclusive():
    verdicts = _fixture_verdicts('quadratic_sqrt3', 'mero-k')
    assert verdicts['mero-k'].label == 'Inconclusive(ThetaNotPositive)'


def test_condition_failure_is_inconclusive(qq5):
    P, Q = _pair(qq5, 'x^2', 'x^2')
    for setting in (ENTIRE_ON_K, MERO_UNBOUNDED_DISK):
        result = verdict(P, Q, setting)
        assert result.label == 'Inconclusive(ConditionMUnverified)'


def test_cor216(qq5):
    result = verdict_cor216(*_pair(qq5, QUINTIC_WITH_FOUR_VALUES, 'x^4 + x'))
    assert result.ruled_out
    assert result.trace['k'] == 4
    weak = verdict_cor216(*_pair(qq5, QUINTIC_WITH_FOUR_VALUES, 'x^2'))
    assert weak.label == 'Inconclusive(HypothesisFails)'


def test_thm214(qq5):
    result = verdict_thm214(*_pair(qq5, QUINTIC_WITH_FOUR_VALUES, 'x^3'))
    assert result.ruled_out
    assert result.trace['l'] == 2
    assert result.trace['window'] == {'low': Fraction(25, 6), 'high': 5}
    weak = verdict_thm214(*_pair(qq5, QUINTIC_WITH_FOUR_VALUES, 'x^5'))
    assert weak.label == 'Inconclusive(HypothesisFails)'


def test_degree_pattern(qq5):
    assert verdict_degree_pattern(*_pair(qq5, 'x^2', '1/(x + 1)')).ruled_out
    consistent = verdict_degree_pattern(*_pair(qq5, 'x^2', 'x'))
    assert consistent.label == 'Inconclusive(PatternConsistent)'


def test_degree_pattern_in_char_p(gf3t):
    result = verdict_degree_pattern(*_pair(gf3t, 'x^2', '1/(x + 1)'))
    assert result.ruled_out
    assert 'note' in result.trace


def test_verdict_all_and_names():
    fixture = load_fixture('x9_over_x_minus_1')
    verdicts = verdict_all(fixture.P, fixture.Q)
    assert [v.setting for v in verdicts] == list(SETTINGS.values())
    names = describe(verdicts)
    assert names[MERO_ON_K] == 'RuledOut'
    assert set(names) >= {ANALYTIC_UNBOUNDED_DISK, THM214, COR216,
                          DEGREE_PATTERN}
    for v in verdicts:
        if v.trace.get('inequality') is not None:
            assert trace_conclusion(v.trace) == v.ruled_out


def _outcomes(P, Q):
    try:
        verdicts = verdict_all(P, Q)
    except UltranevError as err:
        return type(err).__name__
    return [v.to_json() for v in verdicts]


def test_frobenius_twist_keeps_verdicts(gf3t, rng):
    # coefficients a + bT, maps of degree <= 2
    ruled_out = 0
    for _ in range(12):
        P = random_ratmap(rng, gf3t, max_degree=2, max_coeff=2,
                          generator_degree=1)
        Q = random_ratmap(rng, gf3t, max_degree=2, max_coeff=2, role=Q_ROLE,
                          generator_degree=1)
        twisted = [ratmap_frobenius(L) for L in (P, Q)]
        for L, image in zip((P, Q), twisted):
            assert image.degree == L.degree
            assert chi_root_poly(image.num) == L.num
            assert chi_root_poly(image.den) == L.den
            assert frobenius_poly(chi_root_poly(image.num)) == image.num
        before = _outcomes(P, Q)
        assert _outcomes(*twisted) == before
        if not isinstance(before, str):
            ruled_out += sum(v['conclusion'] == 'RuledOut' for v in before)
    assert ruled_out > 0


def test_unknown_setting(qq5):
    with pytest.raises(ValueError):
        verdict(*_pair(qq5, 'x^2', 'x'), 'nowhere')
