"""
    Root finding: exact roots in the declared field, user-supplied root
    certificates, and Hensel-lifted approximations in the unramified
    completion of QQ.
"""
import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd

from sympy import Poly as SymPoly
from sympy import Symbol
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import ZZ
from sympy.polys.factortools import dup_zz_hensel_step

from ultranev.algebra.field import FieldElem
from ultranev.algebra.padic import ApproxRoot, UnramifiedRoots
from ultranev.algebra.poly import (Poly, chi_root_poly, contract_exponents,
                                   poly_derivative, poly_gcd,
                                   poly_multiplicity)
from ultranev.errors import (FieldError, NeedsExtension, NotAChiPower,
                             PrecisionExhausted, ZeroPolynomial)
from ultranev.util import format_rational, p_adic_valuation, to_fraction

logger = logging.getLogger(__name__)

_Y = Symbol('y')


@dataclass(frozen=True)
class RootSet:
    """
        Roots of a polynomial of the given degree.

        exact_roots holds (FieldElem, multiplicity) pairs, approx_roots holds
        ApproxRoot values, unramified holds UnramifiedRoots groups outside
        Q_p and unresolved holds (Poly, multiplicity) factors whose roots
        were not found.
    """
    degree: int
    exact_roots: tuple = ()
    approx_roots: tuple = ()
    unresolved: tuple = ()
    complete: bool = False
    unramified: tuple = ()

    def __post_init__(self):
        if self.complete and self.multiplicity_sum() != self.degree:
            raise ValueError(f'ultranev.algebra.RootSet: complete root set '
                             f'with multiplicity sum {self.multiplicity_sum()} '
                             f'for degree {self.degree}')

    def multiplicity_sum(self):
        return (sum(mult for _, mult in self.exact_roots)
                + sum(root.multiplicity for root in self.approx_roots)
                + sum(group.residue_degree * group.multiplicity
                      for group in self.unramified))

    @property
    def distinct_count(self):
        return (len(self.exact_roots) + len(self.approx_roots)
                + sum(group.residue_degree for group in self.unramified))

    @property
    def is_exact(self):
        return self.all_listed and not self.approx_roots

    @property
    def all_listed(self):
        """
            Complete with every root given individually in Q_p.
        """
        return self.complete and not self.unramified

    def to_json(self):
        return {
            'degree': self.degree,
            'complete': self.complete,
            'exact': [{'root': str(root), 'multiplicity': mult}
                      for root, mult in self.exact_roots],
            'approx': [{'root': str(root), 'valuation': root.valuation,
                        'precision': root.precision,
                        'multiplicity': root.multiplicity}
                       for root in self.approx_roots],
            'unresolved': [{'factor': str(factor), 'multiplicity': mult}
                           for factor, mult in self.unresolved],
            'unramified': [{'roots': str(group),
                            'residue_degree': group.residue_degree,
                            'valuation': group.valuation,
                            'multiplicity': group.multiplicity}
                           for group in self.unramified],
        }


def _merge(pairs):
    merged = {}
    for root, mult in pairs:
        merged[root] = merged.get(root, 0) + mult
    return list(merged.items())


def _linear_root(factor):
    const, lead = factor.raw_coeffs()
    return FieldElem(factor.owner, -const / lead)


def _discriminant(factor):
    c, b, a = factor.coeffs
    return b * b - 4 * a * c


def roots_exact(a, strict=True):
    """
        Exact roots inside the declared field.

        In characteristic 0 the squarefree factors are factored over the
        field with sympy. In characteristic p, x-powers, chi-power content
        and repeated factors are split off and the remaining factors of
        degree <= 2 are solved in closed form.

        :param a Poly: nonzero polynomial
        :param strict bool: raise NeedsExtension on an irreducible quadratic
            instead of leaving it unresolved
        :return: RootSet
    """
    if a.is_zero:
        raise ZeroPolynomial('ultranev.algebra.roots_exact: zero polynomial')
    degree = int(a.degree)
    if degree == 0:
        return RootSet(0, complete=True)
    if a.owner.characteristic:
        exact, unresolved = _roots_char_p(a, strict)
    else:
        exact, unresolved = _roots_char_0(a, strict)
    exact = _merge(exact)
    total = sum(mult for _, mult in exact)
    logger.debug('ultranev.algebra.roots_exact: %d of %d roots of %s found',
                 total, degree, a)
    return RootSet(degree, tuple(exact), (), tuple(unresolved),
                   complete=total == degree)


def _roots_char_0(a, strict):
    owner = a.owner
    exact, unresolved = [], []
    _, squarefree = a.sympy.sqf_list()
    for base, mult in squarefree:
        _, irreducibles = base.factor_list()
        for factor, exp in irreducibles:
            factor = Poly.wrap(owner, factor)
            if factor.degree == 1:
                exact.append((_linear_root(factor), mult * exp))
            elif factor.degree == 2 and strict:
                disc = _discriminant(factor)
                raise NeedsExtension(f'ultranev.algebra.roots_exact: {factor} '
                                     f'needs the square root of {disc}',
                                     discriminant=disc)
            else:
                unresolved.append((factor, mult * exp))
    return exact, unresolved


def _roots_char_p(a, strict):
    owner = a.owner
    exact, unresolved = [], []
    stack = [(a, 1)]
    while stack:
        poly, mult = stack.pop()
        if poly.is_constant:
            continue
        low = poly.low_order()
        if low:
            exact.append((owner.zero, low * mult))
            poly = Poly(owner, poly.raw_coeffs()[low:])
            if poly.is_constant:
                continue
        derivative = poly_derivative(poly)
        if derivative.is_zero:
            try:
                base = chi_root_poly(contract_exponents(poly, owner.chi))
            except NotAChiPower:
                unresolved.append((poly, mult))
                continue
            stack.append((base, mult * owner.chi))
            continue
        common = poly_gcd(poly, derivative)
        if not common.is_constant:
            stack.append((poly.exquo(common), mult))
            stack.append((common, mult))
            continue
        if poly.degree == 1:
            exact.append((_linear_root(poly), mult))
        elif poly.degree == 2 and owner.chi != 2:
            disc = _discriminant(poly)
            root = disc.sqrt()
            if root is None:
                if strict:
                    raise NeedsExtension(f'ultranev.algebra.roots_exact: '
                                         f'{poly} needs the square root of '
                                         f'{disc}', discriminant=disc)
                unresolved.append((poly, mult))
                continue
            _, b, lead = poly.coeffs
            for sign in (1, -1):
                exact.append(((-b + sign * root) / (2 * lead), mult))
        else:
            unresolved.append((poly, mult))
    return exact, unresolved


def _padic_val(value, prime):
    return p_adic_valuation(value, prime) if value else None


def _horner(coeffs, point):
    result = 0
    for coeff in reversed(coeffs):
        result = result * point + coeff
    return result


def _lower_hull_segments(points):
    hull = []
    for point in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (point[1] - y1) - (y2 - y1) * (point[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(point)
    return [(Fraction(y2 - y1, x2 - x1), x1, x2)
            for (x1, y1), (x2, y2) in zip(hull, hull[1:])]


def _newton_refine(coeffs, dcoeffs, start, digits, e, prime):
    modulus = prime ** (digits + 2 * e + 2)
    point = start
    while True:
        value = _horner(coeffs, point)
        if value == 0 or p_adic_valuation(value, prime) - e >= digits:
            return point % prime ** digits
        delta = Fraction(value, _horner(dcoeffs, point))
        point = Fraction(point) - delta
        point = point.numerator * pow(point.denominator, -1, modulus) % modulus


def _lift_unit_roots(coeffs, residue_root, digits, prime):
    """
        Digit tree below one residue root until the strong Hensel criterion
        v(G(a)) > 2 v(G'(a)) holds, then Newton refinement.
    """
    dcoeffs = [i * c for i, c in enumerate(coeffs)][1:]
    frontier = [(residue_root, 1)]
    found = []
    while frontier:
        point, level = frontier.pop()
        value, slope = _horner(coeffs, point), _horner(dcoeffs, point)
        e = _padic_val(slope, prime)
        if e is not None and (value == 0 or
                              p_adic_valuation(value, prime) > 2 * e):
            found.append(_newton_refine(coeffs, dcoeffs, point, digits, e,
                                        prime))
            continue
        if level > 2 * digits:
            raise PrecisionExhausted(f'ultranev.algebra.roots_hensel: roots '
                                     f'not separated within {2 * digits} '
                                     f'digits')
        step = prime ** level
        for digit in range(prime):
            candidate = point + digit * step
            value = _horner(coeffs, candidate)
            if value == 0 or p_adic_valuation(value, prime) >= level + 1:
                frontier.append((candidate, level + 1))
    return found


def _residue(coeffs, prime):
    return SymPoly([c % prime for c in reversed(coeffs)], _Y, modulus=prime)


def _residue_roots(factors, prime):
    roots = []
    for factor, _ in factors:
        if factor.degree() == 1:
            lead, const = [int(c) for c in factor.all_coeffs()]
            root = (-const * pow(lead, -1, prime)) % prime
            if root:
                roots.append(root)
    return roots


def _dense(poly):
    return dup_strip([ZZ(int(c)) for c in poly.all_coeffs()])


def _lift_residue_factor(coeffs, residue, factor, digits, prime):
    """
        Monic integer polynomial congruent to factor modulo p that divides
        coeffs modulo p^digits, by quadratic Hensel steps on the coprime
        splitting residue = factor * cofactor.

        :param coeffs list: integer coefficients, lowest first
        :param residue: reduction of coeffs as a sympy Poly over GF(p)
        :param factor: monic irreducible simple factor of residue
        :return: tuple of coefficients modulo p^digits, lowest first
    """
    cofactor = residue.exquo(factor)
    s, t, _ = cofactor.gcdex(factor)
    f = dup_strip([ZZ(c) for c in reversed(coeffs)])
    g, h, s, t = (_dense(poly) for poly in (cofactor, factor, s, t))
    modulus, target = prime, prime ** digits
    while modulus < target:
        g, h, s, t = dup_zz_hensel_step(ZZ(modulus), f, g, h, s, t, ZZ)
        modulus *= modulus
    return tuple(int(c) % target for c in reversed(h))


def _hensel_factor(factor, mult, digits, strict):
    prime = factor.owner.prime
    fractions = [to_fraction(c) for c in factor.raw_coeffs()]
    scale = 1
    for value in fractions:
        scale = scale * value.denominator // gcd(scale, value.denominator)
    ints = [int(c * scale) for c in fractions]
    content = 0
    for value in ints:
        content = gcd(content, value)
    ints = [value // content for value in ints]

    points = [(i, p_adic_valuation(c, prime)) for i, c in enumerate(ints) if c]
    roots, unramified = [], []
    for slope, start, end in _lower_hull_segments(points):
        if slope.denominator != 1:
            if strict:
                raise NeedsExtension(f'ultranev.algebra.roots_hensel: {factor} '
                                     f'has ramified roots of valuation '
                                     f'{format_rational(-slope)}')
            continue
        valuation = int(-slope)
        support = min(v + valuation * i for i, v in points)
        scaled = []
        for i, coeff in enumerate(ints):
            shifted = Fraction(coeff) * Fraction(prime) ** (valuation * i - support)
            scaled.append(int(shifted))
        residue = _residue(scaled, prime)
        factors = residue.factor_list()[1]
        units = set()
        for residue_root in _residue_roots(factors, prime):
            units.update(_lift_unit_roots(scaled, residue_root, digits, prime))
        roots.extend(ApproxRoot(unit, valuation, digits, mult, prime)
                     for unit in sorted(units))
        # repeated residue factors of degree > 1 stay unresolved
        for piece, exp in factors:
            if piece.degree() > 1 and exp == 1:
                lifted = _lift_residue_factor(scaled, residue, piece, digits,
                                              prime)
                unramified.append(UnramifiedRoots(lifted, valuation, digits,
                                                  mult, prime))
    return roots, unramified


def _found_degree(roots, unramified):
    return len(roots) + sum(group.residue_degree for group in unramified)


def _hensel_root_set(degree, exact, approx, unramified, unresolved):
    roots = RootSet(degree, tuple(exact), tuple(approx), tuple(unresolved),
                    unramified=tuple(unramified))
    return replace(roots, complete=roots.multiplicity_sum() == degree)


def roots_hensel(a, precision, strict=True):
    """
        Roots of a polynomial over QQ in the unramified completion Q_p^ur.
        Linear factors give exact roots. For the other irreducible factors,
        linear residue factors are lifted digit by digit to roots in Q_p and
        simple residue factors of degree f > 1 are lifted to monic factors
        whose roots lie in the unramified extension of degree f.

        :param a Poly: nonzero polynomial over QQ
        :param precision int: digits of each unit part
        :param strict bool: raise NeedsExtension on ramified roots
        :return: RootSet
    """
    owner = a.owner
    if owner.characteristic or owner.extension is not None:
        raise FieldError('ultranev.algebra.roots_hensel: Hensel lifting is '
                         'implemented over QQ only')
    if a.is_zero:
        raise ZeroPolynomial('ultranev.algebra.roots_hensel: zero polynomial')
    degree = int(a.degree)
    exact, approx, unramified, unresolved = [], [], [], []
    for factor, mult in a.sympy.factor_list()[1]:
        factor = Poly.wrap(owner, factor)
        if factor.degree == 1:
            exact.append((_linear_root(factor), mult))
            continue
        found, groups = _hensel_factor(factor, mult, precision, strict)
        approx.extend(found)
        unramified.extend(groups)
        if _found_degree(found, groups) < factor.degree:
            unresolved.append((factor, mult))
    return _hensel_root_set(degree, exact, approx, unramified, unresolved)


def apply_hints(a, roots, hints):
    """
        Uses user-supplied candidate roots to resolve unresolved factors.
        Each hint is verified by exact evaluation.

        :param a Poly: the polynomial
        :param roots RootSet: result of roots_exact
        :param hints iterable: FieldElem candidates
        :return: RootSet
    """
    exact = list(roots.exact_roots)
    unresolved = []
    for factor, mult in roots.unresolved:
        remaining = factor
        for hint in hints:
            count, remaining = poly_multiplicity(remaining, hint)
            if count:
                exact.append((hint, count * mult))
        if not remaining.is_constant:
            unresolved.append((remaining, mult))
    exact = _merge(exact)
    total = sum(mult for _, mult in exact)
    return RootSet(roots.degree, tuple(exact), roots.approx_roots,
                   tuple(unresolved), complete=total == roots.degree)


def find_roots(a, precision=24, hints=(), allow_hensel=True):
    """
        Exact roots first, then hint certificates, then Hensel lifting of
        what is still unresolved (over QQ).

        :return: RootSet, possibly incomplete
    """
    roots = roots_exact(a, strict=False)
    if roots.complete:
        return roots
    if hints:
        roots = apply_hints(a, roots, hints)
        if roots.complete:
            return roots
    owner = a.owner
    if not allow_hensel or owner.characteristic or owner.extension is not None:
        return roots
    exact = list(roots.exact_roots)
    approx, unramified, unresolved = [], [], []
    for factor, mult in roots.unresolved:
        try:
            found, groups = _hensel_factor(factor, mult, precision,
                                           strict=False)
        except PrecisionExhausted as err:
            logger.info('ultranev.algebra.find_roots: %s', err)
            unresolved.append((factor, mult))
            continue
        approx.extend(found)
        unramified.extend(groups)
        if _found_degree(found, groups) < factor.degree:
            unresolved.append((factor, mult))
    return _hensel_root_set(roots.degree, exact, approx, unramified,
                            unresolved)
