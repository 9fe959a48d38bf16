"""
    Truncated power series over a FieldSpec.

    A series is either exact (a polynomial, every coefficient known) or
    truncated at some order. The coefficients of a truncated series at and
    beyond the order are unknown; they are assumed to lie on or above the
    ray starting at (order, tail_valuation) with slope tail_slope in the
    (index, valuation) plane. A tail_slope of None stands for the largest
    slope that does not shrink the certified radius, so that the certified
    radius is decided by the coefficient at index order alone.
"""
import logging
from fractions import Fraction
from math import ceil

from ultranev.algebra.field import FieldElem
from ultranev.algebra.poly import Poly
from ultranev.errors import (FieldError, NonUnitReciprocal, NotAChiPower,
                             ZeroDenominator)
from ultranev.util import format_bound, format_rational, to_fraction

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 64


class TruncSeries:
    """
        Power series sum(a_i x^i), exact or known for i < order.

        :param owner FieldSpec: coefficient field
        :param coeffs iterable: coefficients, lowest index first
        :param order int: truncation order, None for an exact series
        :param tail_valuation: lower bound for v(a_order)
        :param tail_slope: slope of the tail ray, None for the default
    """

    __slots__ = ('_owner', '_raws', '_order', '_tail_valuation', '_tail_slope')

    def __init__(self, owner, coeffs=(), order=None, tail_valuation=0,
                 tail_slope=None):
        raws = [owner.raw(c) for c in coeffs]
        zero = owner.domain.zero
        if order is None:
            while raws and not raws[-1]:
                raws.pop()
            tail_valuation = tail_slope = None
        else:
            if order < 1:
                raise ValueError(f'ultranev.series.TruncSeries: order must be '
                                 f'positive, got {order}')
            raws = raws[:order] + [zero] * (order - len(raws))
            tail_valuation = to_fraction(tail_valuation)
            tail_slope = None if tail_slope is None else to_fraction(tail_slope)
        self._owner = owner
        self._raws = tuple(raws)
        self._order = order
        self._tail_valuation = tail_valuation
        self._tail_slope = tail_slope

    @property
    def owner(self):
        return self._owner

    @property
    def order(self):
        """
            Truncation order, None for exact series.
        """
        return self._order

    @property
    def exact(self):
        return self._order is None

    @property
    def tail_valuation(self):
        return self._tail_valuation

    @property
    def tail_slope(self):
        return self._tail_slope

    def raw_coeffs(self):
        return self._raws

    @property
    def coeffs(self):
        return tuple(FieldElem(self._owner, raw) for raw in self._raws)

    def coeff(self, index):
        """
            Coefficient of x^index; raises for unknown coefficients.
        """
        if self._order is not None and index >= self._order:
            raise IndexError(f'ultranev.series.TruncSeries: coefficient '
                             f'{index} is beyond the order {self._order}')
        raw = self._raws[index] if index < len(self._raws) else self._owner.domain.zero
        return FieldElem(self._owner, raw)

    def __len__(self):
        return len(self._raws)

    @property
    def is_zero(self):
        """
            True when every known coefficient vanishes.
        """
        return not any(self._raws)

    def low_order(self):
        """
            Index of the first nonzero known coefficient, None if there is
            none.
        """
        return next((i for i, raw in enumerate(self._raws) if raw), None)

    @property
    def is_unit(self):
        return bool(self._raws) and bool(self._raws[0])

    @property
    def is_constant(self):
        return self.exact and len(self._raws) <= 1

    def valuation_points(self):
        """
            (index, valuation) for every nonzero known coefficient.
        """
        points = []
        for index, raw in enumerate(self._raws):
            if raw:
                points.append((index, self._owner.valuation(raw)))
        return points

    def truncation_radius(self):
        """
            Largest log-radius t* below which the coefficient at index
            order cannot affect the Newton polygon; None when exact.
        """
        if self.exact:
            return None
        points = self.valuation_points()
        if not points:
            return None
        return max((self._tail_valuation - v) / (self._order - i)
                   for i, v in points)

    def effective_tail_slope(self):
        """
            Tail slope with the default resolved; None when exact.
        """
        if self.exact:
            return None
        if self._tail_slope is not None:
            return self._tail_slope
        radius = self.truncation_radius()
        return Fraction(0) if radius is None else radius

    def certified_radius(self):
        """
            Log-radius below which the Newton polygon of the known part
            describes the zeros of the series; None for +infinity.
        """
        if self.exact:
            return None
        radius = self.truncation_radius()
        slope = self.effective_tail_slope()
        if radius is None:
            return slope
        return min(radius, slope)

    def to_poly(self):
        """
            Known part as a polynomial.
        """
        return Poly(self._owner, self._raws)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self._owner == other._owner
                and len(self._raws) == len(other._raws)
                and all(self._owner.same(a, b)
                        for a, b in zip(self._raws, other._raws))
                and self._order == other._order
                and self._tail_valuation == other._tail_valuation
                and self._tail_slope == other._tail_slope)

    def __hash__(self):
        return hash((self._owner, tuple(map(str, self.coeffs)), self._order))

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_add(self, series_scale(other, -1))

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return series_scale(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return series_scale(self, -1)

    def __str__(self):
        body = ', '.join(str(c) for c in self.coeffs) or '0'
        if self.exact:
            return f'[{body}]'
        return f'[{body}] @ {self._order}'

    def __repr__(self):
        return f'TruncSeries({self})'


def _check_owner(a, b):
    if a.owner != b.owner:
        raise FieldError(f'ultranev.series: mixing {a.owner!r} and '
                         f'{b.owner!r}')


def _global_minorant(a, slope):
    """
        Intercept c with v(a_k) >= c + k * slope for every index k, known or
        not; None when a is the zero polynomial.
    """
    values = [v - i * slope for i, v in a.valuation_points()]
    if not a.exact:
        values.append(a.tail_valuation - a.order * slope)
    return min(values) if values else None


def _result_tail(operands, order, combine):
    """
        Tail ray (valuation at order, slope) shared by the unknown
        coefficients of a sum or product of the operands.
    """
    slope = min(op.effective_tail_slope() for op in operands if not op.exact)
    intercepts = [_global_minorant(op, slope) for op in operands]
    if combine == 'sum':
        intercepts = [c for c in intercepts if c is not None]
        if not intercepts:
            return None, slope
        return min(intercepts) + order * slope, slope
    if any(c is None for c in intercepts):
        return None, slope
    return sum(intercepts) + order * slope, slope


def series_from_poly(a):
    """
        The exact series of a polynomial.
    """
    return TruncSeries(a.owner, a.raw_coeffs())


def series_truncate(a, order, tail_valuation=None):
    """
        Forgets the coefficients at and beyond order.
    """
    if not a.exact and order >= a.order:
        return a
    points = [v for i, v in a.valuation_points() if i >= order]
    if not a.exact:
        points.append(a.tail_valuation)
    if tail_valuation is None:
        tail_valuation = min(points) if points else 0
    slope = None if a.exact else a.effective_tail_slope()
    return TruncSeries(a.owner, a.raw_coeffs()[:order], order, tail_valuation,
                       slope)


def series_add(a, b):
    """
        Exact truncated sum; the order is the smaller one.
    """
    _check_owner(a, b)
    zero = a.owner.domain.zero
    if a.exact and b.exact:
        length = max(len(a), len(b))
        raws = [(a.raw_coeffs()[i] if i < len(a) else zero)
                + (b.raw_coeffs()[i] if i < len(b) else zero)
                for i in range(length)]
        return TruncSeries(a.owner, raws)
    order = min(op.order for op in (a, b) if not op.exact)
    raws = []
    for i in range(order):
        left = a.raw_coeffs()[i] if i < len(a) else zero
        right = b.raw_coeffs()[i] if i < len(b) else zero
        raws.append(left + right)
    tail, slope = _result_tail((a, b), order, 'sum')
    return TruncSeries(a.owner, raws, order, 0 if tail is None else tail,
                       slope)


def series_scale(a, scalar):
    """
        scalar * a.
    """
    raw = a.owner.raw(scalar)
    raws = [raw * c for c in a.raw_coeffs()]
    if a.exact:
        return TruncSeries(a.owner, raws)
    val = a.owner.valuation(raw)
    if val is None:
        return TruncSeries(a.owner, raws, a.order, a.tail_valuation,
                           a.tail_slope)
    return TruncSeries(a.owner, raws, a.order, a.tail_valuation + val,
                       a.tail_slope)


def series_mul(a, b):
    """
        Exact truncated product; the order is the smaller one.
    """
    _check_owner(a, b)
    zero = a.owner.domain.zero
    ra, rb = a.raw_coeffs(), b.raw_coeffs()
    if a.exact and b.exact:
        raws = [zero] * max(len(ra) + len(rb) - 1, 0)
        for i, x in enumerate(ra):
            if not x:
                continue
            for j, y in enumerate(rb):
                raws[i + j] += x * y
        return TruncSeries(a.owner, raws)
    order = min(op.order for op in (a, b) if not op.exact)
    raws = [zero] * order
    for i, x in enumerate(ra[:order]):
        if not x:
            continue
        for j, y in enumerate(rb[:order - i]):
            raws[i + j] += x * y
    tail, slope = _result_tail((a, b), order, 'product')
    return TruncSeries(a.owner, raws, order, 0 if tail is None else tail,
                       slope)


def series_pow(a, exponent):
    result = TruncSeries(a.owner, [1])
    for _ in range(exponent):
        result = series_mul(result, a)
    return result


def series_reciprocal(a, order=None):
    """
        1/a for a series with a unit constant term. An exact nonconstant a
        is expanded to DEFAULT_ORDER unless order is given.

        :param a TruncSeries: the series
        :param order int: truncation order of the result
        :return: TruncSeries
    """
    if not a.is_unit:
        raise NonUnitReciprocal(f'ultranev.series.series_reciprocal: {a} has '
                                f'no unit constant term')
    owner = a.owner
    raws = a.raw_coeffs()
    inverse = 1 / FieldElem(owner, raws[0])
    if a.is_constant:
        return TruncSeries(owner, [inverse])
    if order is None:
        order = a.order if not a.exact else DEFAULT_ORDER
    if not a.exact:
        order = min(order, a.order)

    v0 = owner.valuation(raws[0])
    ratios = [(v - v0) / i for i, v in a.valuation_points() if i >= 1]
    if not a.exact:
        ratios.append((a.tail_valuation - v0) / a.order)
        ratios.append(a.effective_tail_slope())
    growth = min(ratios)

    zero = owner.domain.zero
    result = [inverse.raw]
    for k in range(1, order):
        total = zero
        for i in range(1, min(k, len(raws) - 1) + 1):
            if raws[i]:
                total += raws[i] * result[k - i]
        result.append(-total * inverse.raw)
    return TruncSeries(owner, result, order, -v0 + order * growth, growth)


def series_compose_poly(L, a):
    """
        L(a) for a polynomial L, by Horner's rule.
    """
    result = TruncSeries(a.owner, [])
    for coeff in reversed(L.raw_coeffs()):
        result = series_add(series_mul(result, a),
                            TruncSeries(a.owner, [coeff]))
    return result


def series_shift(a, power):
    """
        x^power * a; a negative power divides out leading zeros.
    """
    zero = a.owner.domain.zero
    if power >= 0:
        raws = [zero] * power + list(a.raw_coeffs())
        order = None if a.exact else a.order + power
    else:
        if any(a.raw_coeffs()[:-power]):
            raise ZeroDenominator(f'ultranev.series.series_shift: x^{-power} '
                                  f'does not divide {a}')
        raws = list(a.raw_coeffs()[-power:])
        order = None if a.exact else a.order + power
    if a.exact:
        return TruncSeries(a.owner, raws)
    return TruncSeries(a.owner, raws, order, a.tail_valuation, a.tail_slope)


def series_derivative(a):
    """
        Formal derivative.
    """
    owner = a.owner
    raws = [owner.raw(i) * raw
            for i, raw in enumerate(a.raw_coeffs())][1:]
    if a.exact:
        return TruncSeries(owner, raws)
    return TruncSeries(owner, raws, max(a.order - 1, 1), a.tail_valuation,
                       a.tail_slope)


def series_chi_root(a):
    """
        The series b with b^chi = a: every nonzero coefficient must sit at an
        index divisible by chi and admit a chi-th root.
    """
    owner = a.owner
    chi = owner.chi
    raws = a.raw_coeffs()
    roots = []
    for index, raw in enumerate(raws):
        if index % chi:
            if raw:
                raise NotAChiPower(f'ultranev.series.series_chi_root: x^{index}'
                                   f' has a nonzero coefficient', index=index)
            continue
        try:
            roots.append(owner.chi_root(raw))
        except NotAChiPower as err:
            raise NotAChiPower(f'ultranev.series.series_chi_root: coefficient '
                               f'of x^{index}: {err}', index=index)
    if a.exact:
        return TruncSeries(owner, roots)
    order = ceil(a.order / chi)
    slope = a.effective_tail_slope()
    tail = (a.tail_valuation + (chi * order - a.order) * slope) / chi
    return TruncSeries(owner, roots[:order], order, tail, slope)


def series_equal_upto(a, b):
    """
        Compares two series on their common known coefficients.

        :return: index of the first difference, None when they agree
    """
    _check_owner(a, b)
    if a.exact and b.exact:
        limit = max(len(a), len(b))
    else:
        limit = min(op.order for op in (a, b) if not op.exact)
    zero = a.owner.domain.zero
    for i in range(limit):
        left = a.raw_coeffs()[i] if i < len(a) else zero
        right = b.raw_coeffs()[i] if i < len(b) else zero
        if left != right:
            return i
    return None


def series_to_json(a):
    return {
        'coeffs': [str(c) for c in a.coeffs],
        'order': a.order,
        'tail_valuation': (None if a.tail_valuation is None
                           else format_rational(a.tail_valuation)),
        'certified': format_bound(a.certified_radius()),
    }


def series_arith(op, *args, **kwargs):
    """
        Dispatches 'add', 'mul', 'reciprocal' and 'compose_poly'.
    """
    table = {
        'add': series_add,
        'mul': series_mul,
        'reciprocal': series_reciprocal,
        'compose_poly': series_compose_poly,
    }
    if op not in table:
        raise ValueError(f'ultranev.series.series_arith: unknown operation '
                         f'{op!r}')
    return table[op](*args, **kwargs)
