import pytest

from ultranev.algebra import Q_ROLE, parse_ratmap
from ultranev.cli import load_fixture
from ultranev.decomp import (NO, YES, YES_AT_PRECISION, check_condition_M,
                             local_factorizations, multiset_size, theta)
from ultranev.errors import FactorizationMismatch


def _pair(field, P, Q):
    return parse_ratmap(field, P), parse_ratmap(field, Q, Q_ROLE)


def _report(name):
    fixture = load_fixture(name)
    return fixture, check_condition_M(fixture.P, fixture.Q, fixture.hints)


def test_shared_critical_value_fails_clause_three(qq5):
    report = check_condition_M(*_pair(qq5, 'x^2', 'x^2'))
    assert report.satisfied == NO
    assert report.failing_clause == 3
    assert report.label == 'No(3)'
    assert report.k == 1
    assert not report.d_checks[0].q_differs


def test_constant_map_fails_clause_one(qq5):
    report = check_condition_M(*_pair(qq5, '3', 'x'))
    assert report.label == 'No(1)'
    assert report.k == 0


def test_no_critical_points(qq5):
    report = check_condition_M(*_pair(qq5, 'x + 1', 'x^2'))
    assert report.label == 'No(3)'
    assert "P' has no zeros" in report.certificates


def test_quadratic_over_extension():
    fixture, report = _report('quadratic_sqrt3')
    assert report.satisfied == YES
    assert report.k == 2
    assert all(check.passed for check in report.d_checks)
    assert [c.status for c in report.clauses] == ['yes'] * 5
    data = report.to_json()
    assert data['satisfied'] == 'Yes'
    assert sorted(data['critical_values']) == ['-4/3', '2/3']


def test_quadratic_local_factorizations():
    fixture, report = _report('quadratic_sqrt3')
    facts = local_factorizations(fixture.P, report)
    assert [f.s for f in facts] == [2, 2]
    assert theta(fixture.P, facts) == 0
    assert all(f.squarefree and f.coprime_to_w for f in facts)
    assert multiset_size(fixture.Q, facts) == 4


def test_high_multiplicity_critical_point():
    fixture, report = _report('x9_over_x_minus_1')
    assert report.satisfied == YES
    facts = local_factorizations(fixture.P, report)
    assert sorted(f.s for f in facts) == [2, 9]
    assert theta(fixture.P, facts) == 7


def test_failed_report_has_no_factorization(qq5):
    P, Q = _pair(qq5, 'x^2', 'x^2')
    report = check_condition_M(P, Q)
    with pytest.raises(FactorizationMismatch):
        local_factorizations(P, report)


def test_hensel_points_give_precision_label(qq5):
    P, Q = _pair(qq5, 'x^3/3 + x', 'x^2')
    report = check_condition_M(P, Q, precision=12)
    assert report.satisfied == YES_AT_PRECISION
    assert report.label == 'YesAtPrecision(12)'
    assert report.k == 2
    assert not report.critical_points.is_exact


def test_without_hensel_roots_stay_unresolved(qq5):
    P, Q = _pair(qq5, 'x^3/3 + x', 'x^2')
    report = check_condition_M(P, Q, allow_hensel=False)
    assert report.label == 'Inconclusive(unresolved roots)'


def test_unramified_critical_points_are_inconclusive(qq5):
    # -2 is not a square modulo 5
    P, Q = _pair(qq5, 'x^3/3 + 2*x', 'x^2')
    report = check_condition_M(P, Q, precision=8)
    assert report.critical_points.complete
    assert report.critical_points.unramified
    assert report.label == 'Inconclusive(unresolved roots)'
