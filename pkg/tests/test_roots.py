from fractions import Fraction

import pytest
from sympy import Poly as SymPoly
from sympy.abc import z

from ultranev.algebra import (PadicApprox, Poly, apply_hints, find_roots,
                              roots_exact, roots_hensel)
from ultranev.errors import FieldError, NeedsExtension


def _roots(root_set):
    return dict(root_set.exact_roots)


def test_rational_roots_with_multiplicity(qq5):
    a = Poly.linear(qq5, 1) ** 2 * Poly(qq5, [3, 2])
    roots = roots_exact(a)
    assert roots.complete and roots.is_exact
    assert _roots(roots) == {qq5.element(1): 2,
                             qq5.element(Fraction(-3, 2)): 1}
    assert roots.distinct_count == 2


def test_irreducible_quadratic(qq5):
    a = Poly(qq5, [1, 0, 1])
    with pytest.raises(NeedsExtension) as err:
        roots_exact(a)
    assert err.value.discriminant == -4
    roots = roots_exact(a, strict=False)
    assert not roots.complete
    assert roots.unresolved[0][0] == a


def test_roots_in_extension(sqrt3):
    s = sqrt3.generator()
    roots = roots_exact(Poly(sqrt3, [-3, 0, 1]))
    assert roots.complete
    assert set(_roots(roots)) == {s, -s}


def test_char_p_quadratic_and_inseparable(gf3t):
    T = gf3t.generator()
    roots = roots_exact(Poly(gf3t, [-T ** 2, 0, 1]))
    assert roots.complete
    assert set(_roots(roots)) == {T, -T}

    cube = roots_exact(Poly(gf3t, [-T ** 3, 0, 0, 1]))
    assert _roots(cube) == {T: 3}

    shifted = roots_exact(Poly(gf3t, [0, -1, 1]))
    assert set(_roots(shifted)) == {gf3t.zero, gf3t.one}


def test_hints_resolve_cubic(gf3t):
    T = gf3t.generator()
    wanted = [T, T ** 2, 1 + T]
    a = Poly(gf3t, [1])
    for root in wanted:
        a = a * Poly.linear(gf3t, root)
    roots = roots_exact(a, strict=False)
    assert not roots.complete
    hinted = apply_hints(a, roots, wanted + [T + 2])
    assert hinted.complete
    assert set(_roots(hinted)) == set(wanted)
    assert find_roots(a, hints=wanted).complete


def test_hensel_roots_of_minus_one(qq5):
    roots = roots_hensel(Poly(qq5, [1, 0, 1]), 10)
    assert roots.complete
    assert len(roots.approx_roots) == 2
    for root in roots.approx_roots:
        assert root.valuation == 0
        assert (root.unit ** 2 + 1) % 5 ** 10 == 0


def test_hensel_scaled_roots(qq5):
    # roots of valuation 1: x^2 + 25
    roots = roots_hensel(Poly(qq5, [25, 0, 1]), 6)
    assert roots.complete
    assert all(root.valuation == 1 for root in roots.approx_roots)


def test_hensel_ramified_and_missing(qq5):
    with pytest.raises(NeedsExtension):
        roots_hensel(Poly(qq5, [-5, 0, 1]), 8)
    assert not roots_hensel(Poly(qq5, [-5, 0, 1]), 8, strict=False).complete
    # -2 is not a square modulo 5: both roots lie in the quadratic
    # unramified extension
    roots = roots_hensel(Poly(qq5, [2, 0, 1]), 8)
    assert roots.complete
    assert not roots.all_listed
    assert [group.factor for group in roots.unramified] == [(2, 0, 1)]


def test_hensel_lifts_irreducible_residue_factors(qq5):
    roots = roots_hensel(Poly(qq5, [1, 1, 1]), 4)
    assert roots.complete
    assert not roots.approx_roots
    (group,) = roots.unramified
    assert group.residue_degree == 2
    assert group.valuation == 0
    assert group.factor == (1, 1, 1)
    assert roots.distinct_count == 2
    assert roots.to_json()['unramified'][0]['residue_degree'] == 2

    # 5x^3 + x^2 + x + 1: a root of valuation -1 in Q_5 and two units
    # whose residues generate F_25
    cubic = [1, 1, 1, 5]
    roots = roots_hensel(Poly(qq5, cubic), 4)
    assert roots.complete
    (root,) = roots.approx_roots
    assert root.valuation == -1
    (group,) = roots.unramified
    assert group.residue_degree == 2
    assert group.factor[2] == 1
    assert [c % 5 for c in group.factor] == [1, 1, 1]
    remainder = SymPoly(list(reversed(cubic)), z).rem(
        SymPoly(list(reversed(group.factor)), z))
    assert all(int(c) % 5 ** 4 == 0 for c in remainder.all_coeffs())

    shifted = roots_hensel(Poly(qq5, [25, 5, 1]), 4)
    assert shifted.complete
    assert shifted.unramified[0].valuation == 1


def test_hensel_only_over_rationals(sqrt3):
    with pytest.raises(FieldError):
        roots_hensel(Poly(sqrt3, [1, 0, 1]), 8)


def test_find_roots_falls_back_to_hensel(qq5):
    a = Poly(qq5, [1, 0, 1]) * Poly.linear(qq5, 2)
    assert not find_roots(a, allow_hensel=False).complete
    roots = find_roots(a, precision=8)
    assert roots.complete
    assert not roots.is_exact
    assert _roots(roots) == {qq5.element(2): 1}


def test_padic_precision_propagation():
    approx = PadicApprox(Fraction(7), 3, 5)
    assert approx.valuation() == 0
    product = approx * PadicApprox.exact(5, 5)
    assert product.absprec == 4
    assert product.valuation() == 1
    assert PadicApprox(Fraction(25), 2, 5).valuation() is None
    assert approx.differs_from(7 + 125) is None
    assert approx.differs_from(8) is True
    assert PadicApprox.exact(3, 5).differs_from(3) is False
    assert PadicApprox(Fraction(7), 3, 5).digits() == [2, 1, 0]
