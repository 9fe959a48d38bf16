"""
    Checks of the growth identities and inequalities satisfied by the
    Nevanlinna function T. Statements "A = B + O(1)" are decided on the
    slopes: exactly on unbounded domains, and only within the certified
    radius (flagged inconclusive about the constant) on bounded ones.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction

from ultranev.algebra.poly import ratmap_from_poly
from ultranev.decomp.verdict import lambda_class
from ultranev.errors import (BeyondCertifiedRadius, HypothesisViolated,
                             NotASolutionPair)
from ultranev.exactnum.plfun import (PLFun, plf_bounded_difference,
                                     plf_eventual_slope, plf_lincomb,
                                     plf_line, plf_to_json)
from ultranev.nevanlinna.bundle import nev_from_divisor
from ultranev.series.mero import (compose_ratmap, mero_agree, mero_divisor,
                                  mero_mul, mero_pow, mero_sub_constant,
                                  ramification_index)
from ultranev.util import format_bound, format_rational, min_bound, to_fraction

logger = logging.getLogger(__name__)

HOLDS_EVENTUALLY = 'HoldsEventually'
VIOLATED_EVENTUALLY = 'ViolatedEventually'
INCONCLUSIVE_WITHIN_RADIUS = 'InconclusiveWithinCertifiedRadius'

BOUNDED_TYPE = 'BoundedType'
UNBOUNDED_TYPE = 'UnboundedType'
INCONCLUSIVE_AT_ORDER = 'InconclusiveAtOrder'


@dataclass(frozen=True)
class TheoremNReport:
    """
        lhs = (n-1) T(f) / chi^s, rhs = sum Zt(f - alpha_i) + Nt(f) - t and
        margin = rhs - lhs, all on the common certified domain.
    """
    lhs: PLFun
    rhs: PLFun
    margin: PLFun
    verdict: str
    slack_slope: Fraction
    n: int
    ramification: int

    def to_json(self):
        return {
            'verdict': self.verdict,
            'slack_slope': format_rational(self.slack_slope),
            'n': self.n,
            'ramification_index': self.ramification,
            'lhs': plf_to_json(self.lhs),
            'rhs': plf_to_json(self.rhs),
            'margin': plf_to_json(self.margin),
        }


@dataclass(frozen=True)
class GrowthComparison:
    """
        Comparison of two growth functions by their bounded difference.
    """
    lhs: PLFun
    rhs: PLFun
    bounded: bool
    slope_gap: Fraction
    conclusive: bool

    @property
    def lhs_slope(self):
        return plf_eventual_slope(self.lhs)

    @property
    def rhs_slope(self):
        return plf_eventual_slope(self.rhs)

    @property
    def slopes_equal(self):
        return self.slope_gap == 0

    def to_json(self):
        return {
            'bounded_difference': self.bounded,
            'conclusive': self.conclusive,
            'slope_gap': format_rational(self.slope_gap),
            'lhs_slope': format_rational(self.lhs_slope),
            'rhs_slope': format_rational(self.rhs_slope),
            'domain_end': format_bound(self.lhs.domain_end),
        }


@dataclass(frozen=True)
class LambdaBoundReport:
    case: int
    value: Fraction
    ntilde_slope: Fraction
    bound_slope: Fraction
    holds: bool
    conclusive: bool

    def to_json(self):
        return {
            'case': self.case,
            'lambda': format_rational(self.value),
            'Nt(g) slope': format_rational(self.ntilde_slope),
            'bound slope': format_rational(self.bound_slope),
            'holds': self.holds,
            'conclusive': self.conclusive,
        }


@dataclass(frozen=True)
class FactorizationCheck:
    index: int
    mismatch_at: object
    lhs_slope: Fraction
    rhs_slope: Fraction

    @property
    def holds(self):
        return self.mismatch_at is None and self.lhs_slope == self.rhs_slope


def _common_end(divisors, t_start):
    end = min_bound(*(d.certified_t for d in divisors))
    if end is not None and end <= t_start:
        raise BeyondCertifiedRadius(f'ultranev.nevanlinna: certified radius '
                                    f'{format_rational(end)} does not exceed '
                                    f'{format_rational(t_start)}')
    return end


def _bundles(functions, t_start):
    divisors = [mero_divisor(f) for f in functions]
    end = _common_end(divisors, t_start)
    return [nev_from_divisor(d, 1, t_start, end) for d in divisors]


def _compare(lhs, rhs):
    difference = plf_bounded_difference(lhs, rhs)
    return GrowthComparison(lhs, rhs, difference.bounded,
                            difference.slope_gap, difference.conclusive)


def check_theorem_N(f, alphas, t_start=0):
    """
        Second main theorem for f and n >= 2 distinct targets, computed on
        the chi^s-root f_s of f (s the ramification index) with the targets
        replaced by their chi^s-th roots.

        :param f MeroRep: no zero and no pole at 0
        :param alphas list: distinct field elements
        :param t_start: left end of the domain
        :return: TheoremNReport
    """
    owner = f.owner
    alphas = [owner.element(alpha) for alpha in alphas]
    n = len(alphas)
    if n < 2:
        raise HypothesisViolated(f'ultranev.nevanlinna.check_theorem_N: '
                                 f'needs at least 2 targets, got {n}',
                                 which='n>=2')
    if len(set(alphas)) != n:
        raise HypothesisViolated('ultranev.nevanlinna.check_theorem_N: '
                                 'targets are not distinct', which='distinct')
    if f.x_power:
        raise HypothesisViolated('ultranev.nevanlinna.check_theorem_N: f has '
                                 'a zero or pole at 0', which='f(0)')
    ramification = ramification_index(f)
    s, reduced = ramification.index, ramification.reduced
    targets = [alpha.chi_root(s) for alpha in alphas]
    shifted = []
    for alpha, target in zip(alphas, targets):
        g = mero_sub_constant(reduced, target)
        if g.x_power:
            raise HypothesisViolated(f'ultranev.nevanlinna.check_theorem_N: '
                                     f'f(0) = {alpha}', which='f(0)!=alpha')
        shifted.append(g)

    start = to_fraction(t_start)
    bundles = _bundles([reduced] + shifted, start)
    main, others = bundles[0], bundles[1:]
    end = main.T.domain_end
    lhs = plf_lincomb([(n - 1, main.T)])
    terms = [(1, b.Ztilde) for b in others]
    terms += [(1, main.Ntilde), (-1, plf_line(1, start, end))]
    rhs = plf_lincomb(terms)
    margin = plf_lincomb([(1, rhs), (-1, lhs)])
    slack = plf_eventual_slope(margin)
    if end is not None:
        verdict = INCONCLUSIVE_WITHIN_RADIUS
    elif not all(b.source.multiplicity_resolved for b in bundles):
        verdict = INCONCLUSIVE_AT_ORDER
    elif slack >= 0:
        verdict = HOLDS_EVENTUALLY
    else:
        verdict = VIOLATED_EVENTUALLY
    logger.info('ultranev.nevanlinna.check_theorem_N: %s, slack slope %s',
                verdict, format_rational(slack))
    return TheoremNReport(lhs, rhs, margin, verdict, slack, n, s)


def check_degree_identity(L, f, t_start=0):
    """
        T(L(f)) against deg(L) T(f).

        :param L RatMap: rational map of degree >= 1
        :param f MeroRep: nonconstant
        :return: GrowthComparison
    """
    if f.is_constant:
        raise HypothesisViolated('ultranev.nevanlinna.check_degree_identity: '
                                 'f is constant', which='nonconstant')
    composed = compose_ratmap(L, f)
    outer, inner = _bundles([composed, f], to_fraction(t_start))
    return _compare(outer.T, plf_lincomb([(L.degree, inner.T)]))


def _check_solution_pair(P, Q, f, g):
    if f.is_constant or g.is_constant:
        raise HypothesisViolated('ultranev.nevanlinna: f and g must be '
                                 'nonconstant', which='nonconstant')
    index = mero_agree(compose_ratmap(P, f), compose_ratmap(Q, g))
    if index is not None:
        raise NotASolutionPair(f'ultranev.nevanlinna: P(f) and Q(g) differ at '
                               f'the coefficient of x^{index}', index=index)


def check_pq_relation(P, Q, f, g, t_start=0):
    """
        q T(g) against p T(f) for a solution pair of P(f) = Q(g).
    """
    _check_solution_pair(P, Q, f, g)
    tf, tg = _bundles([f, g], to_fraction(t_start))
    return _compare(plf_lincomb([(Q.degree, tg.T)]),
                    plf_lincomb([(P.degree, tf.T)]))


def check_lambda_bound(P, Q, f, g, t_start=0):
    """
        Eventual slope of Nt(g) against Lambda times the slope of T(f).
    """
    _check_solution_pair(P, Q, f, g)
    tf, tg = _bundles([f, g], to_fraction(t_start))
    lam = lambda_class(P, Q)
    left = plf_eventual_slope(tg.Ntilde)
    right = lam.value * plf_eventual_slope(tf.T)
    conclusive = (tf.T.domain_end is None
                  and tg.source.multiplicity_resolved)
    return LambdaBoundReport(lam.case, lam.value, left, right, left <= right,
                             conclusive)


def classify_divisor_boundedness(divisor, disk_t, t_start=0):
    """
        Bounded-type when the divisor is certified up to the disk boundary
        (so it is finite there), Unbounded-type when at least three distinct
        log-radii approach the boundary with gaps at least halving and T
        keeps growing, else InconclusiveAtOrder.
    """
    disk_t = to_fraction(disk_t)
    certified = divisor.certified_t
    if certified is None or certified >= disk_t:
        return BOUNDED_TYPE
    radii = sorted({e.log_radius for e in divisor.entries
                    if e.log_radius < disk_t})
    if len(radii) >= 3:
        gaps = [disk_t - radius for radius in radii[-3:]]
        halving = all(later * 2 <= earlier
                      for earlier, later in zip(gaps, gaps[1:]))
        if halving:
            bundle = nev_from_divisor(divisor, 1, t_start, certified)
            if plf_eventual_slope(bundle.T) > 0:
                return UNBOUNDED_TYPE
    return INCONCLUSIVE_AT_ORDER


def classify_boundedness(f, disk_t, t_start=0):
    """
        Boundedness type of f on the disk of log-radius disk_t.
    """
    return classify_divisor_boundedness(mero_divisor(f), disk_t, t_start)


def check_factorization_identity(P, fact, f, t_start=0):
    """
        Checks R(f) - P(c) S(f) = (f - c)^s A(f) as truncated series and the
        counting identity Z(R(f) - P(c) S(f)) = s Z(f - c) + Z(A(f)) + O(1)
        by slopes.

        :param P RatMap: P = R/S
        :param fact LocalFactorization: exact local factorization
        :param f MeroRep: the function
        :return: FactorizationCheck
    """
    if not fact.exact:
        raise HypothesisViolated('ultranev.nevanlinna.'
                                 'check_factorization_identity: approximate '
                                 'critical point', which='exact')
    rest = P.num - P.den * fact.critical_value
    left = compose_ratmap(ratmap_from_poly(rest), f)
    shifted = mero_sub_constant(f, fact.critical_point)
    cofactor = compose_ratmap(ratmap_from_poly(fact.A), f)
    right = mero_mul(mero_pow(shifted, fact.s), cofactor)
    mismatch = mero_agree(left, right)
    lhs, shift, tail = _bundles([left, shifted, cofactor],
                                to_fraction(t_start))
    lhs_slope = plf_eventual_slope(lhs.Z)
    rhs_slope = fact.s * plf_eventual_slope(shift.Z) + plf_eventual_slope(tail.Z)
    return FactorizationCheck(fact.index, mismatch, lhs_slope, rhs_slope)
