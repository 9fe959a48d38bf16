"""
    Counting functions of a divisor as exact piecewise-linear functions of
    t = log_p(rho):

        Z(t)  = sum over zeros a with log|a| <= t of w_a (t - log|a|)
        N(t)  = the same over poles
        Zt, Nt: the same with every multiplicity replaced by 1
        T(t)  = max(Z(t), N(t))

    A zero or pole of order m at the origin adds m t (tilde: t).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from ultranev.errors import UncertifiedDivisor
from ultranev.exactnum.plfun import (PLFun, plf_eval, plf_from_json, plf_max,
                                     plf_to_json)
from ultranev.series.mero import Divisor, mero_divisor, ramification_index
from ultranev.util import format_bound, format_rational, min_bound, to_fraction

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NevBundle:
    Z: PLFun
    N: PLFun
    T: PLFun
    Ztilde: PLFun
    Ntilde: PLFun
    source: Divisor
    chi_power: int = 1

    @property
    def domain(self):
        return self.T.domain_start, self.T.domain_end

    def functions(self):
        return {'Z': self.Z, 'N': self.N, 'T': self.T, 'Zt': self.Ztilde,
                'Nt': self.Ntilde}

    def to_json(self):
        data = {key: plf_to_json(f) for key, f in self.functions().items()}
        data['chi_power'] = self.chi_power
        data['divisor'] = self.source.to_json()
        return data

    @classmethod
    def from_json(cls, data):
        return cls(plf_from_json(data['Z']), plf_from_json(data['N']),
                   plf_from_json(data['T']), plf_from_json(data['Zt']),
                   plf_from_json(data['Nt']),
                   Divisor.from_json(data.get('divisor', {})),
                   int(data.get('chi_power', 1)))


def counting_function(points, origin, start, end):
    """
        sum(w (t - l) for (l, w) in points with l <= t) + origin * t on
        [start, end).

        :param points list: (log_radius, weight) pairs, weights positive
        :param origin int: weight of the origin
        :return: PLFun
    """
    anchor = origin * start
    slope = Fraction(origin)
    later = {}
    for log_radius, weight in points:
        if log_radius <= start:
            anchor += weight * (start - log_radius)
            slope += weight
        elif end is None or log_radius < end:
            later[log_radius] = later.get(log_radius, 0) + weight
    segments = [(start, slope)]
    for breakpoint in sorted(later):
        slope += later[breakpoint]
        segments.append((breakpoint, slope))
    return PLFun(start, end, anchor, segments)


def nev_from_divisor(divisor, chi_power=1, t_start=0, end=None):
    """
        Assembles Z, N, T and the tilde variants of a divisor on
        [t_start, end), end defaulting to the certified radius.

        :param divisor Divisor: the divisor
        :param chi_power int: chi^t of the underlying function
        :param t_start: left end of the domain
        :param end: right end, None for the certified radius
        :return: NevBundle
    """
    start = to_fraction(t_start)
    end = min_bound(divisor.certified_t, None if end is None
                    else to_fraction(end))
    if end is not None and end <= start:
        raise UncertifiedDivisor(f'ultranev.nevanlinna.nev_from_divisor: '
                                 f'certified radius {format_rational(end)} '
                                 f'does not exceed t_start '
                                 f'{format_rational(start)}')
    zeros = [(e.log_radius, e.multiplicity) for e in divisor.zeros]
    poles = [(e.log_radius, -e.multiplicity) for e in divisor.poles]
    origin = divisor.origin_order
    Z = counting_function(zeros, max(origin, 0), start, end)
    N = counting_function(poles, max(-origin, 0), start, end)
    Zt = counting_function([(t, 1) for t, _ in zeros], int(origin > 0),
                           start, end)
    Nt = counting_function([(t, 1) for t, _ in poles], int(origin < 0),
                           start, end)
    logger.debug('ultranev.nevanlinna.nev_from_divisor: %d zeros, %d poles '
                 'on [%s, %s)', len(zeros), len(poles),
                 format_rational(start), format_bound(end))
    return NevBundle(Z, N, plf_max(Z, N), Zt, Nt, divisor, chi_power)


def nev_from_mero(f, t_start=0, end=None):
    """
        Bundle of a MeroRep through its divisor.
    """
    chi_power = 1
    if f.owner.characteristic:
        chi_power = f.owner.chi ** ramification_index(f).index
    return nev_from_divisor(mero_divisor(f), chi_power, t_start, end)


def nev_evaluate(bundle, t):
    """
        Values of the five functions at t, as "a/b" strings.
    """
    return {key: format_rational(plf_eval(f, t))
            for key, f in bundle.functions().items()}
