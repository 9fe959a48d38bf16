from fractions import Fraction

import pytest

from ultranev.algebra import Poly, ratmap_from_poly
from ultranev.errors import DegenerateComposition
from ultranev.series import (Divisor, DivisorEntry, MeroRep, TruncSeries,
                             compose_ratmap, divisor_negate, divisor_sum,
                             mero_agree, mero_divisor, mero_pow,
                             mero_sub_constant, parse_function,
                             ramification_index)


def test_divisor_entries_and_counts():
    divisor = Divisor((DivisorEntry(Fraction(1), -1), DivisorEntry(Fraction(0), 2)))
    assert divisor.entries[0] == DivisorEntry(0, 2)
    assert divisor.zero_count == 2
    assert divisor.pole_count == 1
    restricted = divisor.restrict(1)
    assert restricted.entries == (DivisorEntry(0, 2),)
    assert restricted.certified_t == 1
    assert Divisor.from_json(divisor.to_json()) == divisor
    with pytest.raises(ValueError):
        Divisor((DivisorEntry(Fraction(0), 0),))
    with pytest.raises(ValueError):
        Divisor((DivisorEntry(Fraction(2), 1),), certified_t=1)


def test_divisor_sum_and_negate():
    first = Divisor((DivisorEntry(Fraction(0), 1),), origin_order=1)
    second = Divisor((DivisorEntry(Fraction(3), 2),), certified_t=Fraction(4))
    total = divisor_sum(first, second)
    assert total.certified_t == 4
    assert total.origin_order == 1
    assert total.zero_count == 3
    negated = divisor_negate(total)
    assert negated.pole_count == 3
    assert negated.origin_order == -1


def test_mero_rep_normalizes(qq5):
    f = MeroRep(TruncSeries(qq5, [-1, 0, 1]), TruncSeries(qq5, [-1, 1]))
    assert f.num == TruncSeries(qq5, [1, 1])
    assert f.den.is_constant
    g = MeroRep(TruncSeries(qq5, [0, 0, 3]), TruncSeries(qq5, [0, 1]))
    assert g.x_power == 1
    assert g.value_at_zero() is None
    assert f.value_at_zero() == 1


def test_divisor_of_rational_function(qq5):
    f = parse_function(qq5, 'x^2*(x - 5)/(x - 1/5)')
    divisor = mero_divisor(f)
    assert divisor.entries == (DivisorEntry(-1, 1), DivisorEntry(1, -1))
    assert divisor.origin_order == 2
    assert divisor.certified_t is None
    pole = mero_divisor(parse_function(qq5, '1/(1 - x)'))
    assert pole.entries == (DivisorEntry(0, -1),)


def test_truncated_zero_numerator(qq5):
    with pytest.raises(DegenerateComposition):
        mero_divisor(MeroRep(TruncSeries(qq5, [0, 0], 2)))


def test_compose_ratmap(qq5):
    square = ratmap_from_poly(Poly(qq5, [0, 0, 1]))
    f = parse_function(qq5, '1/(1 - x)')
    composed = compose_ratmap(square, f)
    expected = MeroRep(TruncSeries(qq5, [1]), TruncSeries(qq5, [1, -2, 1]))
    assert mero_agree(composed, expected) is None


def test_sub_constant(qq5):
    f = MeroRep(TruncSeries(qq5, [1, 1]))
    shifted = mero_sub_constant(f, 1)
    assert shifted.x_power == 1
    assert shifted.num == TruncSeries(qq5, [1])


def test_agree_finds_first_difference(qq5):
    f = parse_function(qq5, '1/(1 - x)')
    assert mero_agree(f, MeroRep(TruncSeries(qq5, [1, 1, 1, 1], 4))) is None
    assert mero_agree(f, MeroRep(TruncSeries(qq5, [1, 1, 1, 2], 4))) == 3


def test_pow(qq5):
    x = MeroRep(TruncSeries(qq5, [0, 1]))
    assert mero_pow(x, 3).x_power == 3


def test_ramification_in_char_p(gf3t):
    f = MeroRep(TruncSeries(gf3t, [1, 0, 0, 1]))
    ramification = ramification_index(f)
    assert ramification.index == 1
    assert ramification.reduced.num == TruncSeries(gf3t, [1, 1])
    divisor = mero_divisor(f)
    assert divisor.entries == (DivisorEntry(0, 3),)
    assert divisor.multiplicity_resolved


def test_ramification_in_char_0(qq5):
    f = MeroRep(TruncSeries(qq5, [1, 0, 0, 1]))
    assert ramification_index(f).index == 0
