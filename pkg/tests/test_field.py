from fractions import Fraction

import pytest

from ultranev.algebra import FieldBuilder, FieldSpec, chi_root
from ultranev.errors import FieldError, NotAChiPower, ZeroDenominator


def test_rational_valuation(qq5):
    assert qq5.element(50).valuation() == 2
    assert qq5.element(Fraction(1, 25)).valuation() == -2
    assert qq5.element(7).valuation() == 0
    assert qq5.zero.valuation() is None


def test_rejects_bad_primes_and_characteristics():
    with pytest.raises(FieldError):
        FieldSpec(0, 6)
    with pytest.raises(FieldError):
        FieldSpec(5, 7)


def test_extension_arithmetic(sqrt3):
    s = sqrt3.generator()
    assert s * s == 3
    assert s.valuation() == 0
    assert str(s + 2) == 's + 2'
    assert str(s / 2 - Fraction(1, 3)) == '1/2*s - 1/3'
    assert sqrt3.element('s^2 + 1') == 4


def test_ramified_generator_valuation(wfield):
    w = wfield.generator()
    assert w.valuation() == Fraction(1, 2)
    assert (w ** 3).valuation() == Fraction(3, 2)
    assert (w ** -2).valuation() == -1


def test_extension_validation():
    with pytest.raises(FieldError):
        FieldBuilder(5).with_extension('w', 'x^2 - 5', 0).get_result()
    with pytest.raises(FieldError):
        FieldBuilder(5).with_extension('r', 'x^2 - 1').get_result()
    with pytest.raises(FieldError):
        FieldBuilder(3).with_characteristic(3).with_extension(
            'r', 'x^2 - 2').get_result()


def test_json_round_trip(sqrt3, gf3t, qq5):
    for field in (sqrt3, gf3t, qq5):
        assert FieldSpec.from_json(field.to_json()) == field


def test_char_p_valuation_and_chi_root(gf3t):
    T = gf3t.generator()
    assert (T ** 2 / (1 + T)).valuation() == 2
    assert chi_root(1 + T ** 3) == 1 + T
    assert (T ** 9).chi_root(2) == T
    with pytest.raises(NotAChiPower):
        T.chi_root()


def test_frobenius_inverts_chi_root(gf3t):
    T = gf3t.generator()
    for value in (1 + T ** 3, T ** 6 + 2 * T ** 3, (T ** 3 + 1) / T ** 9):
        assert value.chi_root().frobenius() == value


def test_char_p_rejects_p_in_denominators(gf3t):
    with pytest.raises(ZeroDenominator):
        gf3t.element(Fraction(1, 3))


def test_square_roots(qq5, sqrt3, gf3t):
    assert qq5.element(Fraction(9, 4)).sqrt() ** 2 == Fraction(9, 4)
    assert qq5.element(2).sqrt() is None
    assert sqrt3.element(3).sqrt() ** 2 == 3
    T = gf3t.generator()
    root = (T ** 2 + 2 * T + 1).sqrt()
    assert root is not None and root ** 2 == T ** 2 + 2 * T + 1


def test_split_quadratic_chooses_an_embedding():
    # 3 is a square modulo 11: the square roots are 5 and 6
    first = FieldBuilder(11).with_extension('s', 'x^2 - 3').get_result()
    second = FieldBuilder(11).with_extension('s', 'x^2 - 3',
                                             branch=1).get_result()
    assert first.extension.branch == 0
    assert first != second
    s = first.generator()
    assert s * s == 3
    assert s.valuation() == 0
    assert (s - 6).valuation() == 1
    assert (s - 5).valuation() == 0
    t = second.generator()
    assert (t - 5).valuation() == 1
    assert (t - 6).valuation() == 0
    assert ((t - 5) * (t + 5)).valuation() == 1
    assert FieldSpec.from_json(second.to_json()) == second
    assert FieldBuilder(13).with_extension('s', 'x^2 - 3').get_result()


def test_split_quadratic_branch_follows_valuation():
    # x^2 + x + 5 has one root of valuation 1 and one unit root in Q_5
    deep = FieldBuilder(5).with_extension('r', 'x^2 + x + 5', 1).get_result()
    unit = FieldBuilder(5).with_extension('r', 'x^2 + x + 5', 0).get_result()
    assert deep.extension.branch == 0
    assert unit.extension.branch == 1
    assert deep.generator().valuation() == 1
    assert unit.generator().valuation() == 0
    assert (deep.generator() + 1).valuation() == 0
    with pytest.raises(FieldError):
        FieldBuilder(5).with_extension('r', 'x^2 + x + 5', 1,
                                       branch=1).get_result()
    with pytest.raises(FieldError):
        FieldBuilder(2).with_extension('r', 'x^2 - 17').get_result()


def test_char_p_elements_compare_by_value(gf3t):
    T = gf3t.generator()
    halved = T / 2
    assert halved == -T
    assert hash(halved) == hash(-T)
    assert {halved: 'value'}[-T] == 'value'
    assert len({halved, -T, T * 2}) == 1
    assert (1 + T) / (2 + 2 * T) == 2
    assert halved != T
