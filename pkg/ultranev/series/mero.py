"""
    Meromorphic representations x^e * num / den, their divisors, composition
    with rational maps and the ramification index in characteristic p.
"""
import logging
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ultranev.algebra.poly import (Poly, poly_gcd, ratmap_from_poly,
                                  separable_decomposition)
from ultranev.errors import (DegenerateComposition, FieldError, NotAChiPower,
                             ZeroDenominator)
from ultranev.series.newton import newton_polygon
from ultranev.series.truncseries import (TruncSeries, series_add,
                                         series_chi_root, series_derivative,
                                         series_equal_upto, series_from_poly,
                                         series_mul, series_pow, series_scale,
                                         series_shift, series_to_json)
from ultranev.util import (format_bound, format_rational, min_bound,
                           parse_bound, to_fraction)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class DivisorEntry:
    """
        One point alpha of the divisor: log_radius = log_p|alpha| and its
        multiplicity (positive for a zero, negative for a pole).
    """
    log_radius: Fraction
    multiplicity: int


@dataclass(frozen=True)
class Divisor:
    """
        Zeros and poles away from the origin, certified for log-radii below
        certified_t (None for +infinity). origin_order is the order of f at
        0. multiplicity_resolved is False when entries were read from
        polygon segments as simple points.
    """
    entries: tuple = ()
    certified_t: Optional[Fraction] = None
    origin_order: int = 0
    multiplicity_resolved: bool = True

    def __post_init__(self):
        entries = tuple(sorted(self.entries))
        object.__setattr__(self, 'entries', entries)
        for entry in entries:
            if entry.multiplicity == 0:
                raise ValueError('ultranev.series.Divisor: zero multiplicity')
            if (self.certified_t is not None
                    and entry.log_radius > self.certified_t):
                raise ValueError(f'ultranev.series.Divisor: entry at '
                                 f'{format_rational(entry.log_radius)} beyond '
                                 f'certified radius '
                                 f'{format_rational(self.certified_t)}')

    @property
    def zeros(self):
        return tuple(e for e in self.entries if e.multiplicity > 0)

    @property
    def poles(self):
        return tuple(e for e in self.entries if e.multiplicity < 0)

    @property
    def zero_count(self):
        return sum(e.multiplicity for e in self.zeros)

    @property
    def pole_count(self):
        return -sum(e.multiplicity for e in self.poles)

    @property
    def is_empty(self):
        return not self.entries and not self.origin_order

    def restrict(self, certified_t):
        """
            Keeps the entries strictly below certified_t.
        """
        bound = min_bound(self.certified_t, certified_t)
        kept = [e for e in self.entries if bound is None or e.log_radius < bound]
        return Divisor(tuple(kept), bound, self.origin_order,
                       self.multiplicity_resolved)

    def to_json(self):
        return {
            'entries': [[format_rational(e.log_radius), e.multiplicity]
                        for e in self.entries],
            'certified_t': format_bound(self.certified_t),
            'origin_order': self.origin_order,
            'multiplicity_resolved': self.multiplicity_resolved,
        }

    @classmethod
    def from_json(cls, data):
        return cls(tuple(DivisorEntry(to_fraction(t), int(m))
                         for t, m in data.get('entries', [])),
                   parse_bound(data.get('certified_t')),
                   int(data.get('origin_order', 0)),
                   bool(data.get('multiplicity_resolved', True)))


def divisor_sum(first, second):
    """
        Divisor of a product: entries concatenated, certified radius the
        smaller one.
    """
    certified = min_bound(first.certified_t, second.certified_t)
    entries = [e for e in first.entries + second.entries
               if certified is None or e.log_radius < certified]
    return Divisor(tuple(entries), certified,
                   first.origin_order + second.origin_order,
                   first.multiplicity_resolved and second.multiplicity_resolved)


def divisor_negate(divisor):
    return Divisor(tuple(DivisorEntry(e.log_radius, -e.multiplicity)
                         for e in divisor.entries),
                   divisor.certified_t, -divisor.origin_order,
                   divisor.multiplicity_resolved)


class MeroRep:
    """
        f = x^x_power * num / den with num(0) != 0 and den(0) != 0.

        Leading zero coefficients of num and den are moved into x_power; two
        exact parts are divided by their gcd.

        :param num TruncSeries: numerator
        :param den TruncSeries: denominator, 1 when omitted
        :param x_power int: order of f at the origin
    """

    __slots__ = ('_num', '_den', '_x_power')

    def __init__(self, num, den=None, x_power=0):
        if den is None:
            den = TruncSeries(num.owner, [1])
        if num.owner != den.owner:
            raise FieldError('ultranev.series.MeroRep: numerator and '
                             'denominator over different fields')
        if den.is_zero:
            raise ZeroDenominator(f'ultranev.series.MeroRep: denominator '
                                  f'{den} vanishes up to its order')
        shift = den.low_order()
        if shift:
            den = series_shift(den, -shift)
            x_power -= shift
        shift = num.low_order()
        if shift:
            num = series_shift(num, -shift)
            x_power += shift
        if num.exact and den.exact and not num.is_zero:
            common = poly_gcd(num.to_poly(), den.to_poly())
            if not common.is_constant:
                num = series_from_poly(num.to_poly().exquo(common))
                den = series_from_poly(den.to_poly().exquo(common))
        self._num = num
        self._den = den
        self._x_power = x_power

    @property
    def num(self):
        return self._num

    @property
    def den(self):
        return self._den

    @property
    def x_power(self):
        return self._x_power

    @property
    def owner(self):
        return self._num.owner

    @property
    def exact(self):
        return self._num.exact and self._den.exact

    @property
    def order(self):
        """
            Smallest truncation order of the parts, None when exact.
        """
        return min_bound(self._num.order, self._den.order)

    @property
    def certified_t(self):
        return min_bound(self._num.certified_radius(),
                         self._den.certified_radius())

    @property
    def is_zero(self):
        return self._num.is_zero

    @property
    def is_constant(self):
        return (self._x_power == 0 and self._num.is_constant
                and self._den.is_constant)

    def value_at_zero(self):
        """
            f(0) when f has neither zero nor pole at the origin.
        """
        if self._x_power or self._num.is_zero:
            return None
        return self._num.coeff(0) / self._den.coeff(0)

    def __str__(self):
        prefix = f'x^{self._x_power} * ' if self._x_power else ''
        if self._den.is_constant and self._den.coeff(0) == 1:
            return f'{prefix}{self._num}'
        return f'{prefix}{self._num} / {self._den}'

    def __repr__(self):
        return f'MeroRep({self})'

    def to_json(self):
        return {
            'num': series_to_json(self._num),
            'den': series_to_json(self._den),
            'x_power': self._x_power,
            'certified_t': format_bound(self.certified_t),
        }


def mero_from_ratmap(L):
    """
        Exact MeroRep of a rational map.
    """
    return MeroRep(series_from_poly(L.num), series_from_poly(L.den))


def mero_from_series(num, den=None):
    return MeroRep(num, den)


def _series_divisor(a, scale):
    """
        Zeros of a series away from 0, each multiplicity multiplied by scale.
    """
    owner = a.owner
    if a.exact:
        if a.is_constant:
            return Divisor()
        entries = []
        for part, mult, level in separable_decomposition(a.to_poly()):
            shrink = owner.chi ** level
            for slope, length in newton_polygon(series_from_poly(part)).slopes:
                entry = DivisorEntry(Fraction(slope) / shrink, mult * scale)
                entries.extend([entry] * length)
        return Divisor(tuple(entries))
    if a.is_zero:
        raise DegenerateComposition(f'ultranev.series.mero_divisor: {a} '
                                    f'vanishes up to its order')
    polygon = newton_polygon(a)
    certified = polygon.certified_up_to
    entries = []
    for slope, length in polygon.slopes:
        if certified is not None and slope >= certified:
            continue
        entries.extend([DivisorEntry(slope, scale)] * length)
    resolved = all(length == 1 for _, length in polygon.slopes)
    return Divisor(tuple(entries), certified, 0, resolved)


def mero_divisor(f):
    """
        Zeros minus poles of f. In characteristic p, f is first reduced to
        its chi^t-th root and the multiplicities scaled back by chi^t.

        :param f MeroRep: the function
        :return: Divisor
    """
    scale, reduced = 1, f
    if f.owner.characteristic:
        ramification = ramification_index(f)
        scale = f.owner.chi ** ramification.index
        reduced = ramification.reduced
    zeros = _series_divisor(reduced.num, scale)
    poles = divisor_negate(_series_divisor(reduced.den, scale))
    result = divisor_sum(zeros, poles)
    certified = min_bound(result.certified_t, f.certified_t)
    result = result.restrict(certified) if certified is not None else result
    return Divisor(result.entries, result.certified_t, f.x_power,
                   result.multiplicity_resolved)


Ramification = namedtuple('Ramification', ['index', 'reduced', 'order_checked'])


def ramification_index(f):
    """
        Largest t such that f is a chi^t-th power, detected by vanishing
        derivatives up to the truncation order, together with the reduced
        representative f_t and the order the check ran at.

        :param f MeroRep: the function
        :return: Ramification
    """
    owner = f.owner
    if not owner.characteristic:
        return Ramification(0, f, f.order)
    chi, index = owner.chi, 0
    while True:
        if f.num.is_constant and f.den.is_constant:
            break
        if f.x_power % chi:
            break
        if not (series_derivative(f.num).is_zero
                and series_derivative(f.den).is_zero):
            break
        try:
            f = MeroRep(series_chi_root(f.num), series_chi_root(f.den),
                        f.x_power // chi)
        except NotAChiPower:
            # a series in x^p whose coefficients are not p-th powers
            break
        index += 1
    if index:
        logger.debug('ultranev.series.ramification_index: index %d, checked '
                     'at order %s', index, f.order)
    return Ramification(index, f, f.order)


def _materialize(f):
    """
        (A, B) with f = A / B, the power of x folded into one part.
    """
    if f.x_power >= 0:
        return series_shift(f.num, f.x_power), f.den
    return f.num, series_shift(f.den, -f.x_power)


def _homogenize(coeffs, a_powers, b_powers, degree, owner):
    total = TruncSeries(owner, [])
    for i, coeff in enumerate(coeffs):
        if coeff.is_zero:
            continue
        term = series_mul(a_powers[i], b_powers[degree - i])
        total = series_add(total, series_scale(term, coeff))
    return total


def compose_ratmap(L, f):
    """
        L(f) for a rational map L = n(x)/d(x) of degree n and f = A/B:
        sum(n_i A^i B^(n-i)) / sum(d_i A^i B^(n-i)), renormalized.

        :param L RatMap: the rational map
        :param f MeroRep: the function
        :return: MeroRep
    """
    owner = f.owner
    degree = L.degree
    a, b = _materialize(f)
    a_powers = [series_pow(a, i) for i in range(degree + 1)]
    b_powers = [series_pow(b, i) for i in range(degree + 1)]
    num = _homogenize(L.num.coeffs, a_powers, b_powers, degree, owner)
    den = _homogenize(L.den.coeffs, a_powers, b_powers, degree, owner)
    if num.is_zero and den.is_zero:
        raise DegenerateComposition(f'ultranev.series.compose_ratmap: '
                                    f'{L} of {f} vanishes up to its order')
    if den.is_zero:
        raise DegenerateComposition(f'ultranev.series.compose_ratmap: the '
                                    f'denominator of {L} of {f} vanishes')
    return MeroRep(num, den)


def mero_sub_constant(f, alpha):
    """
        f - alpha.
    """
    alpha = f.owner.element(alpha)
    shift = ratmap_from_poly(Poly(f.owner, [-alpha, 1]))
    return compose_ratmap(shift, f)


def mero_agree(f, g):
    """
        Compares f and g as truncated series by cross-multiplication.

        :return: index of the first differing coefficient of
            num_f den_g - num_g den_f (after aligning x-powers), None when
            they agree
    """
    low = min(f.x_power, g.x_power)
    left = series_mul(series_shift(f.num, f.x_power - low), g.den)
    right = series_mul(series_shift(g.num, g.x_power - low), f.den)
    return series_equal_upto(left, right)


def mero_mul(f, g):
    return MeroRep(series_mul(f.num, g.num), series_mul(f.den, g.den),
                   f.x_power + g.x_power)


def mero_pow(f, exponent):
    return MeroRep(series_pow(f.num, exponent), series_pow(f.den, exponent),
                   f.x_power * exponent)
