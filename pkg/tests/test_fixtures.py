import pytest

from ultranev.cli import compare_fixture, fixture_names, load_fixture, run_fixture


def test_shipped_fixtures():
    assert fixture_names() == ['double_critical_cubic', 'quadratic_sqrt3',
                               'x9_over_x_minus_1']


@pytest.mark.parametrize('name', fixture_names())
def test_fixture_reproduces_expected_values(name):
    result = run_fixture(name)
    assert result.mismatches == []


def test_mismatch_is_reported():
    fixture = load_fixture('quadratic_sqrt3')
    result = run_fixture('quadratic_sqrt3')
    wrong = fixture._replace(expected=dict(fixture.expected, k=3, theta=1))
    mismatches = compare_fixture(wrong, result.report, result.verdicts)
    assert len(mismatches) == 2
    assert mismatches[0].startswith('k: expected 3')


def test_unknown_fixture():
    with pytest.raises(ValueError):
        load_fixture('no_such_pair')


def test_quadratic_fixture_records_its_denominator():
    fixture = load_fixture('quadratic_sqrt3')
    assert fixture.P.den.degree == 2
    assert fixture.P.den(0) == fixture.P.owner.one
    assert 'S = x^2 + 1 and not x^2' in fixture.description
