from fractions import Fraction

import pytest

from ultranev.algebra import (P_ROLE, Q_ROLE, Poly, chi_root_poly,
                              contract_exponents, critical_numerator,
                              distinct_zero_count, expand_exponents,
                              poly_derivative, poly_gcd, poly_multiplicity,
                              poly_resultant, poly_squarefree_part,
                              ratmap_derivative, ratmap_eval, ratmap_from_poly,
                              ratmap_normalize, separable_decomposition)
from ultranev.errors import (NotAChiPower, PoleAtPoint, ZeroDenominator,
                             ZeroPolynomial)


def test_arithmetic_and_format(qq5):
    a = Poly(qq5, [1, 0, 2])
    b = Poly.linear(qq5, 3)
    assert str(a) == '2*x^2 + 1'
    assert str(b) == 'x - 3'
    assert (a * b).degree == 3
    assert a(2) == 9
    assert (a - a).is_zero
    assert Poly(qq5, [5]) == 5


def test_derivative_and_gcd(qq5):
    a = Poly.linear(qq5, 1) ** 2 * Poly.linear(qq5, -2)
    assert poly_derivative(a) == Poly(qq5, [-3, 0, 3])
    g = poly_gcd(a, poly_derivative(a))
    assert g == Poly.linear(qq5, 1)
    assert poly_squarefree_part(a) == Poly.linear(qq5, 1) * Poly.linear(qq5, -2)
    with pytest.raises(ZeroPolynomial):
        poly_gcd(Poly(qq5), Poly(qq5))


def test_multiplicity_and_resultant(qq5):
    a = Poly.linear(qq5, 2) ** 3 * Poly(qq5, [1, 0, 1])
    count, cofactor = poly_multiplicity(a, 2)
    assert count == 3
    assert cofactor == Poly(qq5, [1, 0, 1])
    assert poly_multiplicity(a, 1)[0] == 0
    assert poly_resultant(Poly.linear(qq5, 1), Poly.linear(qq5, 4)) != 0
    assert poly_resultant(a, Poly.linear(qq5, 2)) == 0


def test_distinct_zero_count_char_0(qq5):
    a = Poly.linear(qq5, 1) ** 2 * Poly.linear(qq5, -2) * Poly(qq5, [1, 0, 1])
    assert distinct_zero_count(a) == 4
    assert distinct_zero_count(Poly(qq5, [7])) == 0


def test_distinct_zero_count_inseparable(gf3t):
    T = gf3t.generator()
    inseparable = Poly(gf3t, [-T, 0, 0, 1])
    assert distinct_zero_count(inseparable) == 1
    mixed = inseparable * Poly.linear(gf3t, 1) ** 2
    assert distinct_zero_count(mixed) == 2
    cube = Poly.linear(gf3t, T) ** 3
    assert distinct_zero_count(cube) == 1


def test_separable_decomposition(gf3t, qq5):
    T = gf3t.generator()
    line = Poly.linear(gf3t, T)
    parts = separable_decomposition(line ** 2 * Poly(gf3t, [-T, 0, 0, 1]))
    assert [(mult, level) for _, mult, level in parts] == [(2, 0), (3, 1)]
    assert parts[0][0] == line
    assert parts[1][0] == line
    square = separable_decomposition(Poly(gf3t, [1, 2, 1]))
    assert square == [(Poly.linear(gf3t, -1), 2, 0)]
    rational = separable_decomposition(Poly.linear(qq5, 2) ** 3)
    assert rational == [(Poly.linear(qq5, 2), 3, 0)]


def test_exponent_contraction(qq5):
    a = Poly(qq5, [1, 0, 0, 2, 0, 0, 5])
    c = contract_exponents(a, 3)
    assert c == Poly(qq5, [1, 2, 5])
    assert expand_exponents(c, 3) == a
    with pytest.raises(ValueError):
        contract_exponents(Poly(qq5, [1, 1]), 3)


def test_chi_root_poly(gf3t, qq5):
    T = gf3t.generator()
    a = Poly(gf3t, [T ** 3, 1, 1 + T ** 6])
    assert chi_root_poly(a) == Poly(gf3t, [T, 1, 1 + T ** 2])
    with pytest.raises(NotAChiPower) as err:
        chi_root_poly(Poly(gf3t, [1, T]))
    assert err.value.index == 1


def test_ratmap_normalize(qq5):
    num = Poly.linear(qq5, 1) * Poly(qq5, [0, 2])
    den = Poly.linear(qq5, 1) * Poly(qq5, [3, 3])
    L = ratmap_normalize(num, den)
    assert L.num == Poly(qq5, [0, Fraction(2, 3)])
    assert L.den == Poly(qq5, [1, 1])
    assert L.degree == 1
    with pytest.raises(ZeroDenominator):
        ratmap_normalize(num, Poly(qq5))


def test_q_role_keeps_leading_ratio(qq5):
    Q = ratmap_normalize(Poly(qq5, [0, 0, 3]), Poly(qq5, [1, 0, 1]), Q_ROLE)
    assert Q.leading_ratio == 3
    assert 'cannot both be monic' in Q.monic_note
    P = ratmap_normalize(Poly(qq5, [0, 0, 3]), Poly(qq5, [1, 0, 1]), P_ROLE)
    assert P.monic_note == ''


def test_ratmap_eval_and_derivative(qq5):
    L = ratmap_normalize(Poly(qq5, [1, 0, 1]), Poly(qq5, [0, 1]))
    assert ratmap_eval(L, 2) == Fraction(5, 2)
    with pytest.raises(PoleAtPoint):
        ratmap_eval(L, 0)
    derivative = ratmap_derivative(L)
    assert derivative(1) == 0
    assert critical_numerator(L) == Poly(qq5, [-1, 0, 1])


def test_critical_numerator_drops_pole_factors(qq5):
    P = ratmap_normalize(Poly(qq5, [0] * 9 + [1]), Poly(qq5, [-1, 1]))
    numerator = critical_numerator(P)
    assert poly_multiplicity(numerator, 0)[0] == 8
    assert poly_multiplicity(numerator, Fraction(9, 8))[0] == 1
    assert distinct_zero_count(numerator) == 2


def test_ratmap_from_poly(qq5):
    L = ratmap_from_poly(Poly(qq5, [1, 2, 3]))
    assert L.den == 1
    assert L.degree == 2
