"""
    Exact piecewise-linear functions of the log-radius t = log_p(rho).

    A PLFun is stored the slope way: a domain [start, end) (end None means
    +infinity), the value at start, and an ordered list of (breakpoint,
    slope) pairs whose first breakpoint is the domain start. Continuity holds
    by construction since values are propagated from the anchor.
"""
import logging
from bisect import bisect_right
from collections import namedtuple
from fractions import Fraction

from ultranev.errors import DomainMismatch, OutOfDomain
from ultranev.util import (format_bound, format_rational, parse_bound,
                           to_fraction)

logger = logging.getLogger(__name__)

BoundedDifference = namedtuple('BoundedDifference',
                               ['bounded', 'slope_gap', 'sup_gap',
                                'conclusive'])


class PLFun:
    """
        Immutable, exact, continuous piecewise-linear function.

        :param start: left end of the domain (included)
        :param end: right end of the domain (excluded), None for +infinity
        :param anchor: value at start
        :param segments: iterable of (breakpoint, slope) pairs
    """

    __slots__ = ('_start', '_end', '_anchor', '_breaks', '_slopes',
                 '_values')

    def __init__(self, start, end, anchor, segments=()):
        self._start = to_fraction(start)
        self._end = None if end is None else to_fraction(end)
        self._anchor = to_fraction(anchor)
        prefix = f'ultranev.exactnum.{self.__class__.__name__}'

        if self._end is not None and self._end <= self._start:
            raise OutOfDomain(f'{prefix}: empty domain [{self._start}, '
                              f'{self._end})')

        pairs = [(to_fraction(bp), to_fraction(sl)) for bp, sl in segments]
        if not pairs:
            pairs = [(self._start, Fraction(0))]
        if pairs[0][0] != self._start:
            raise OutOfDomain(f'{prefix}: first breakpoint {pairs[0][0]} is '
                              f'not the domain start {self._start}')

        breaks, slopes = [], []
        previous = None
        for breakpoint, slope in pairs:
            if previous is not None and breakpoint <= previous:
                raise OutOfDomain(f'{prefix}: breakpoints must be strictly '
                                  f'increasing')
            if self._end is not None and breakpoint >= self._end:
                raise OutOfDomain(f'{prefix}: breakpoint {breakpoint} outside '
                                  f'the domain')
            previous = breakpoint
            # merge equal slopes
            if slopes and slopes[-1] == slope:
                continue
            breaks.append(breakpoint)
            slopes.append(slope)

        values = [self._anchor]
        for idx in range(1, len(breaks)):
            values.append(values[-1]
                          + slopes[idx - 1] * (breaks[idx] - breaks[idx - 1]))

        self._breaks = tuple(breaks)
        self._slopes = tuple(slopes)
        self._values = tuple(values)

    @property
    def domain_start(self):
        return self._start

    @property
    def domain_end(self):
        """
            Right end of the domain, None standing for +infinity.
        """
        return self._end

    @property
    def anchor_value(self):
        return self._anchor

    @property
    def segments(self):
        """
            Canonical (breakpoint, slope) pairs.
        """
        return tuple(zip(self._breaks, self._slopes))

    @property
    def bounded(self):
        """
            True when the domain has a finite right end.
        """
        return self._end is not None

    def same_domain(self, other):
        return (self._start == other.domain_start
                and self._end == other.domain_end)

    def value_at_breakpoints(self):
        """
            Exact values at every canonical breakpoint.

            :return: tuple of (breakpoint, value) pairs
        """
        return tuple(zip(self._breaks, self._values))

    def slope_at(self, t):
        """
            Slope of the segment containing t (right derivative).
        """
        idx = bisect_right(self._breaks, t) - 1
        return self._slopes[max(idx, 0)]

    def _value(self, t):
        idx = bisect_right(self._breaks, t) - 1
        return self._values[idx] + self._slopes[idx] * (t - self._breaks[idx])

    def __call__(self, t):
        return plf_eval(self, t)

    def __eq__(self, other):
        if not isinstance(other, PLFun):
            return NotImplemented
        return (self.same_domain(other) and self._anchor == other._anchor
                and self._breaks == other._breaks
                and self._slopes == other._slopes)

    def __hash__(self):
        return hash((self._start, self._end, self._anchor, self._breaks,
                     self._slopes))

    def __add__(self, other):
        return plf_lincomb([(1, self), (1, other)])

    def __sub__(self, other):
        return plf_lincomb([(1, self), (-1, other)])

    def __neg__(self):
        return plf_lincomb([(-1, self)])

    def __mul__(self, scalar):
        return plf_lincomb([(scalar, self)])

    __rmul__ = __mul__

    def __repr__(self):
        pieces = ', '.join(f'[{format_rational(bp)}: {format_rational(sl)}]'
                           for bp, sl in self.segments)
        return (f'PLFun([{format_rational(self._start)}, '
                f'{format_bound(self._end)}), '
                f'anchor={format_rational(self._anchor)}, {pieces})')


def _check_domains(functions, caller):
    first = functions[0]
    for other in functions[1:]:
        if not first.same_domain(other):
            raise DomainMismatch(
                f'ultranev.exactnum.{caller}: domains '
                f'[{first.domain_start}, {format_bound(first.domain_end)}) and '
                f'[{other.domain_start}, {format_bound(other.domain_end)}) '
                f'differ')


def _merged_breaks(functions):
    return sorted(set().union(*(f._breaks for f in functions)))


def plf_zero(start=0, end=None):
    """
        The zero function on [start, end).
    """
    return PLFun(start, end, 0)


def plf_line(slope, start=0, end=None, intercept=0):
    """
        The line t -> slope * t + intercept restricted to [start, end).
    """
    start = to_fraction(start)
    slope = to_fraction(slope)
    return PLFun(start, end, slope * start + to_fraction(intercept),
                 [(start, slope)])


def plf_eval(f, t):
    """
        Evaluates f exactly at t.

        :param f PLFun: the function
        :param t: point of the domain
        :return: Fraction value
    """
    t = to_fraction(t)
    if t < f.domain_start or (f.domain_end is not None
                              and t >= f.domain_end):
        raise OutOfDomain(f'ultranev.exactnum.plf_eval: {t} outside '
                          f'[{f.domain_start}, {format_bound(f.domain_end)})')
    return f._value(t)


def plf_max(a, b):
    """
        Pointwise maximum of two functions sharing a domain. Crossing points
        inside a segment become new breakpoints.

        :param a PLFun: first function
        :param b PLFun: second function
        :return: PLFun max(a, b)
    """
    _check_domains([a, b], 'plf_max')
    breaks = _merged_breaks([a, b])
    segments = []
    for idx, left in enumerate(breaks):
        right = breaks[idx + 1] if idx + 1 < len(breaks) else a.domain_end
        va, vb = a._value(left), b._value(left)
        sa, sb = a.slope_at(left), b.slope_at(left)
        a_on_top = va > vb or (va == vb and sa >= sb)
        top, other = (sa, sb) if a_on_top else (sb, sa)
        segments.append((left, top))
        if top < other:
            gap = abs(va - vb)
            crossing = left + gap / (other - top)
            if right is None or crossing < right:
                segments.append((crossing, other))
    anchor = max(a.anchor_value, b.anchor_value)
    return PLFun(a.domain_start, a.domain_end, anchor, segments)


def plf_lincomb(terms):
    """
        Exact linear combination sum(c * f) of functions sharing a domain.

        :param terms list: (coefficient, PLFun) pairs
        :return: PLFun
    """
    terms = [(to_fraction(coef), f) for coef, f in terms]
    if not terms:
        raise DomainMismatch('ultranev.exactnum.plf_lincomb: no terms')
    functions = [f for _, f in terms]
    _check_domains(functions, 'plf_lincomb')
    first = functions[0]
    anchor = sum((coef * f.anchor_value for coef, f in terms), Fraction(0))
    segments = [(bp, sum((coef * f.slope_at(bp) for coef, f in terms),
                         Fraction(0)))
                for bp in _merged_breaks(functions)]
    return PLFun(first.domain_start, first.domain_end, anchor, segments)


def plf_eventual_slope(f):
    """
        Slope of the last segment.
    """
    return f._slopes[-1]


def plf_restrict(f, end):
    """
        Restricts f to [start, end); end must not exceed the current end.

        :param f PLFun: the function
        :param end: new right end, None keeps +infinity
        :return: PLFun on the smaller domain
    """
    end = None if end is None else to_fraction(end)
    if end == f.domain_end:
        return f
    if end is None or (f.domain_end is not None and end > f.domain_end):
        raise OutOfDomain(f'ultranev.exactnum.plf_restrict: cannot extend '
                          f'{format_bound(f.domain_end)} to {format_bound(end)}')
    kept = [(bp, sl) for bp, sl in f.segments if bp < end]
    return PLFun(f.domain_start, end, f.anchor_value, kept)


def plf_bounded_difference(a, b):
    """
        Decides whether a - b stays bounded. On +infinity domains the answer
        is the eventual slope of a - b; on bounded domains a - b is always
        bounded and only its supremum is reported, flagged inconclusive
        about asymptotics.

        :param a PLFun: first function
        :param b PLFun: second function
        :return: BoundedDifference(bounded, slope_gap, sup_gap, conclusive)
    """
    diff = plf_lincomb([(1, a), (-1, b)])
    gap = plf_eventual_slope(diff)
    values = [abs(value) for _, value in diff.value_at_breakpoints()]
    if diff.bounded:
        values.append(abs(diff._value(diff.domain_end)))
        return BoundedDifference(True, gap, max(values), False)
    if gap != 0:
        logger.debug('ultranev.exactnum.plf_bounded_difference: slope gap %s',
                     gap)
        return BoundedDifference(False, gap, None, True)
    return BoundedDifference(True, gap, max(values), True)


def plf_breakpoints(f):
    return tuple(bp for bp, _ in f.segments)


def plf_sample(f, points):
    """
        Exact values of f at the given abscissae, used for plot data.

        :param f PLFun: the function
        :param points iterable: abscissae inside the domain
        :return: list of (t, value) pairs
    """
    return [(to_fraction(t), plf_eval(f, t)) for t in points]


def plf_to_json(f):
    """
        Serializes f with rationals as "a/b" strings.
    """
    return {
        'domain': [format_rational(f.domain_start), format_bound(f.domain_end)],
        'anchor': format_rational(f.anchor_value),
        'segments': [[format_rational(bp), format_rational(sl)]
                     for bp, sl in f.segments],
    }


def plf_from_json(data):
    """
        Reads back the output of plf_to_json.
    """
    start, end = data['domain']
    return PLFun(to_fraction(start), parse_bound(end),
                 to_fraction(data['anchor']),
                 [(to_fraction(bp), to_fraction(sl))
                  for bp, sl in data['segments']])
