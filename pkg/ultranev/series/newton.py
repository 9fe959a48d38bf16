"""
    Newton polygons of truncated series and the zero counts they certify.

    Slopes are measured in the (index, valuation) plane, so a segment of
    slope t and length m stands for m zeros alpha with log_p|alpha| = t.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ultranev.errors import AllZeroUpToOrder, BeyondCertifiedRadius
from ultranev.util import format_bound, format_rational, to_fraction

logger = logging.getLogger(__name__)

CLOSED = 'closed'
OPEN = 'open'


@dataclass(frozen=True)
class NewtonPolygon:
    """
        Lower convex hull of the points (i, v(a_i)).

        vertices are (index, valuation) pairs, slopes are (slope, length)
        pairs in increasing order, certified_up_to is None when the series is
        exact and origin_order is the index of the first vertex (the order of
        the zero at 0).
    """
    vertices: tuple
    slopes: tuple
    certified_up_to: Optional[Fraction]
    origin_order: int

    @property
    def zero_count(self):
        """
            Number of nonzero zeros the polygon accounts for.
        """
        return sum(length for _, length in self.slopes)

    def to_json(self):
        return {
            'vertices': [[i, format_rational(v)] for i, v in self.vertices],
            'slopes': [[format_rational(s), m] for s, m in self.slopes],
            'certified_up_to': format_bound(self.certified_up_to),
            'origin_order': self.origin_order,
        }


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points):
    """
        Lower convex hull of points sorted by abscissa (monotone chain).

        :param points list: (index, valuation) pairs with distinct indices
        :return: list of hull vertices, left to right
    """
    hull = []
    for point in sorted(points):
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], point) <= 0:
            hull.pop()
        hull.append(point)
    return hull


def newton_polygon(a):
    """
        Newton polygon of a truncated series.

        :param a TruncSeries: series with at least one nonzero known
            coefficient
        :return: NewtonPolygon
    """
    points = a.valuation_points()
    if not points:
        raise AllZeroUpToOrder(f'ultranev.series.newton_polygon: every known '
                               f'coefficient of {a} vanishes')
    vertices = lower_hull(points)
    slopes = []
    for (i0, v0), (i1, v1) in zip(vertices, vertices[1:]):
        slopes.append((Fraction(v1 - v0) / (i1 - i0), i1 - i0))
    return NewtonPolygon(tuple(vertices), tuple(slopes),
                         a.certified_radius(), vertices[0][0])


def check_certified(polygon, t, boundary=CLOSED):
    """
        Raises BeyondCertifiedRadius unless zeros up to log-radius t are
        captured by the polygon.
    """
    certified = polygon.certified_up_to
    if certified is None:
        return
    if t > certified or (t == certified and boundary == CLOSED):
        raise BeyondCertifiedRadius(f'ultranev.series: log-radius '
                                    f'{format_rational(t)} is beyond the '
                                    f'certified radius '
                                    f'{format_rational(certified)}')


def count_zeros_disk(a, t, boundary=CLOSED):
    """
        Number of zeros, with multiplicity, in the disk of radius p^t:
        log_p|alpha| <= t for the closed disk, < t for the open one. A zero
        at the origin is always counted.

        :param a TruncSeries or NewtonPolygon: the series
        :param t: log-radius
        :param boundary str: CLOSED or OPEN
        :return: non-negative integer
    """
    polygon = a if isinstance(a, NewtonPolygon) else newton_polygon(a)
    t = to_fraction(t)
    check_certified(polygon, t, boundary)
    if boundary == CLOSED:
        inside = [m for slope, m in polygon.slopes if slope <= t]
    else:
        inside = [m for slope, m in polygon.slopes if slope < t]
    return polygon.origin_order + sum(inside)
