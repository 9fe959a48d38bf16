import json
from argparse import Namespace
from fractions import Fraction

import pytest

from ultranev.algebra import FieldSpec
from ultranev.cli import (RunConfig, flatten_report, read_field, render,
                          render_csv)
from ultranev.cli.main import main
from ultranev.errors import FieldError


def _run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _json(capsys, *argv):
    code, out, _ = _run(capsys, *argv)
    return code, json.loads(out)


def test_check_m_fixture(capsys):
    code, data = _json(capsys, 'check-m', '--fixture', 'quadratic_sqrt3')
    assert code == 0
    assert data['satisfied'] == 'Yes'
    assert data['k'] == 2


def test_check_m_failure(capsys):
    code, data = _json(capsys, 'check-m', 'x^2', 'x^2')
    assert code == 1
    assert data['satisfied'] == 'No(3)'


def test_malformed_expression(capsys):
    code, out, err = _run(capsys, 'check-m', 'x^2 +', 'x')
    assert code == 3
    assert out == ''
    assert err.startswith('error:')


def test_missing_q(capsys):
    code, _, err = _run(capsys, 'check-m', 'x^2')
    assert code == 3
    assert 'P and Q are required' in err


def test_verdict_settings(capsys):
    code, data = _json(capsys, 'verdict', '--fixture', 'x9_over_x_minus_1',
                       '--setting', 'mero-k')
    assert code == 0
    assert data['conclusion'] == 'RuledOut'
    assert data['trace']['inequality'] == {'lhs': '14', 'rhs': '13',
                                           'relation': '>='}
    code, data = _json(capsys, 'verdict', '--fixture', 'double_critical_cubic',
                       '--setting', 'disk')
    assert code == 2
    assert data['conclusion'] == 'Inconclusive(InequalityConsistent)'


def test_verdict_all(capsys):
    code, data = _json(capsys, 'verdict', '--fixture', 'x9_over_x_minus_1',
                       '--setting', 'all')
    assert code == 0
    assert len(data) == 7


def test_nev_divisor(capsys):
    code, data = _json(capsys, 'nev', 'zero@0 x2', '--at', '2')
    assert code == 0
    assert data['at']['values']['Z'] == '4'
    assert data['at']['values']['Zt'] == '2'
    assert data['divisor']['entries'] == [['0', 2]]


def test_nev_csv_rows(capsys):
    code, out, _ = _run(capsys, 'nev', '1/(1 - x)', '--format', 'csv')
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == 'function,t,value'
    assert 'N,0,0' in lines


def test_nev_pretty(capsys):
    code, out, _ = _run(capsys, 'nev', '[1, 1] @ 4', '--format', 'pretty',
                        '--tail', '2')
    assert code == 0
    assert 'chi_power: 1' in out


def test_theorem_n(capsys):
    code, data = _json(capsys, 'theorem-n', '1 + x', '--alpha', '2',
                       '--alpha', '3')
    assert code == 0
    assert data['verdict'] == 'HoldsEventually'
    assert data['slack_slope'] == '0'


def test_theorem_n_truncated(capsys):
    code, data = _json(capsys, 'theorem-n', '1 + x', '--alpha', '2',
                       '--alpha', '3', '--truncate', '--order', '8',
                       '--tail', '5')
    assert code == 2
    assert data['verdict'] == 'InconclusiveWithinCertifiedRadius'


def test_theorem_n_hypothesis(capsys):
    code, _, err = _run(capsys, 'theorem-n', '1 + x', '--alpha', '1',
                        '--alpha', '2')
    assert code == 3
    assert 'f(0)' in err


def test_zeros(capsys):
    code, data = _json(capsys, 'zeros', '[1, 1, 5]', '--at', '1')
    assert code == 0
    assert data['count'] == 2
    assert data['certified_up_to'] == 'inf'
    code, data = _json(capsys, 'zeros', '5*x^2 + x + 1', '--at', '0', '--open')
    assert data['count'] == 0
    code, _, err = _run(capsys, 'zeros', '[1, 1, 5] @ 3', '--at', '3',
                        '--tail', '3')
    assert code == 3
    assert 'certified radius' in err


def test_fixture_command(capsys):
    code, data = _json(capsys, 'fixture', 'double_critical_cubic')
    assert code == 0
    assert data['match'] is True
    assert data['mismatches'] == []


def test_invalid_order(capsys):
    code, _, err = _run(capsys, 'zeros', '[1]', '--at', '0', '--order', '2')
    assert code == 3
    assert 'truncation order' in err


def test_field_from_inline_json(capsys):
    field = '{"char": 0, "p": 5, "ext": {"gen": "s", "minpoly": "x^2 - 3"}}'
    code, data = _json(capsys, 'check-m', '--field', field, 's*x^2', 'x + 1')
    assert code == 0
    assert data['satisfied'] == 'Yes'


def test_run_config_from_args():
    args = Namespace(p=7, char=None, order=16, precision=None, format='csv',
                     t_start='1/2', tail=None, field=None)
    config = RunConfig.from_args(args)
    assert config.field == FieldSpec(0, 7)
    assert config.truncation_order == 16
    assert config.precision_digits == 24
    assert config.output == 'csv'
    assert config.t_start == Fraction(1, 2)
    with pytest.raises(ValueError):
        RunConfig(FieldSpec(0, 5), output='xml')


def test_read_field_errors():
    with pytest.raises(FieldError):
        read_field('{"char": 0,')
    with pytest.raises(FieldError):
        read_field('/nonexistent/field.json')


def test_rendering():
    data = {'a': {'b': [1, 2]}, 'c': None}
    assert flatten_report(data) == [('a.b.0', 1), ('a.b.1', 2), ('c', '')]
    assert render_csv([('x', 1)]) == 'key,value\nx,1\n'
    assert json.loads(render(data, 'json')) == data
    assert 'c: -' in render(data, 'pretty')
