"""
    Verdict engine for P(f) = Q(g).

    Every verdict is either RuledOut (a growth inequality that nonconstant
    solutions must satisfy fails) or Inconclusive(reason). The engine never
    claims that solutions exist. Each verdict carries the integers and
    rationals it was decided from, so the conclusion can be replayed from
    the trace alone.
"""
import logging
from collections import namedtuple
from dataclasses import dataclass, field
from fractions import Fraction

from ultranev.algebra.poly import distinct_zero_count, poly_derivative
from ultranev.algebra.roots import find_roots
from ultranev.decomp.condition import check_condition_M
from ultranev.decomp.factorization import local_factorizations, theta
from ultranev.errors import FactorizationMismatch, UncoveredDegreePattern
from ultranev.util import format_rational

logger = logging.getLogger(__name__)

ENTIRE_ON_K = 'EntireOnK'
ANALYTIC_UNBOUNDED_DISK = 'AnalyticUnboundedDisk'
MERO_ON_K = 'MeroOnK'
MERO_UNBOUNDED_DISK = 'MeroUnboundedDisk'
THM214 = 'AnalyticOnK_Thm214'
COR216 = 'AnalyticOnK_Cor216'
DEGREE_PATTERN = 'AnalyticOnK_DegreePattern'

RULED_OUT = 'RuledOut'
INCONCLUSIVE = 'Inconclusive'

SETTINGS = {
    'entire': ENTIRE_ON_K,
    'disk': ANALYTIC_UNBOUNDED_DISK,
    'mero-k': MERO_ON_K,
    'mero-disk': MERO_UNBOUNDED_DISK,
    'thm214': THM214,
    'cor216': COR216,
    'degree-pattern': DEGREE_PATTERN,
}

LambdaClass = namedtuple('LambdaClass', ['case', 'value'])


@dataclass(frozen=True)
class Verdict:
    """
        Conclusion of one setting with its inequality trace.
    """
    setting: str
    conclusion: str
    reason: str = ''
    trace: dict = field(default_factory=dict)

    @property
    def ruled_out(self):
        return self.conclusion == RULED_OUT

    @property
    def label(self):
        if self.conclusion == INCONCLUSIVE:
            return f'{INCONCLUSIVE}({self.reason})'
        return self.conclusion

    def to_json(self):
        return {
            'setting': self.setting,
            'conclusion': self.label,
            'trace': {key: _jsonable(value)
                      for key, value in self.trace.items()},
        }


def _jsonable(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {key: _jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(item) for item in value]
    return value


def _degree(poly):
    return 0 if poly.is_zero else int(poly.degree)


def _inequality(lhs, rhs, relation):
    return {'lhs': Fraction(lhs), 'rhs': Fraction(rhs), 'relation': relation}


def _holds(lhs, rhs, relation):
    if relation == '>=':
        return lhs >= rhs
    return lhs > rhs


def _base_trace(P, Q, report=None):
    trace = {
        'p': P.degree,
        'q': Q.degree,
        'r': _degree(P.num), 's_deg': _degree(P.den),
        'v': _degree(Q.num), 'w': _degree(Q.den),
        'k': None,
        's': [],
        'theta': None,
        'gammaW': None,
        'lambda': None,
        'inequality': None,
    }
    if report is not None:
        trace['k'] = report.k
        trace['condition_m'] = report.label
    if P.owner.characteristic:
        trace['note'] = ('characteristic p: k, p and q are unchanged by the '
                         'chi-root reduction of R, S, V, W')
    return trace


def lambda_class(P, Q):
    """
        Case number and pole-bound coefficient of the pair (P, Q), a pure
        function of the degrees and of gamma(R), gamma(S).

        :param P RatMap: P = R/S
        :param Q RatMap: Q = V/W
        :return: LambdaClass(case, value)
    """
    if P.num.is_zero or Q.num.is_zero:
        raise UncoveredDegreePattern('ultranev.decomp.lambda_class: zero '
                                     'numerator has no degree pattern')
    r, s = _degree(P.num), _degree(P.den)
    v, w = _degree(Q.num), _degree(Q.den)
    ratio = Fraction(P.degree, Q.degree)
    if v == w:
        return LambdaClass(1, ratio)
    if v < w and r >= s:
        return LambdaClass(2, min(Fraction(distinct_zero_count(P.num)), ratio))
    if v > w and r <= s:
        return LambdaClass(3, min(Fraction(distinct_zero_count(P.den)), ratio))
    if v > w and r > s:
        return LambdaClass(4, min(Fraction(distinct_zero_count(P.den) + 1),
                                  ratio))
    if v < w and r < s:
        return LambdaClass(5, min(Fraction(distinct_zero_count(P.num) + 1),
                                  ratio))
    raise UncoveredDegreePattern(f'ultranev.decomp.lambda_class: (r, s, v, '
                                 f'w) = {(r, s, v, w)}')


def _report(P, Q, report, **options):
    return report if report is not None else check_condition_M(P, Q, **options)


def verdict_entire(P, Q, setting=ENTIRE_ON_K, report=None, **options):
    """
        Nonconstant entire solutions (EntireOnK) need qk - p < 0, unbounded
        analytic ones in a disk (AnalyticUnboundedDisk) need qk - p <= 0.
    """
    report = _report(P, Q, report, **options)
    trace = _base_trace(P, Q, report)
    if not report.ok:
        return Verdict(setting, INCONCLUSIVE, 'ConditionMUnverified', trace)
    p, q, k = P.degree, Q.degree, report.k
    relation = '>=' if setting == ENTIRE_ON_K else '>'
    trace['inequality'] = _inequality(q * k - p, 0, relation)
    if _holds(q * k - p, 0, relation):
        return Verdict(setting, RULED_OUT, '', trace)
    return Verdict(setting, INCONCLUSIVE, 'InequalityConsistent', trace)


def _critical_value_count(R):
    """
        Number of distinct values of R at the zeros of R', None when the
        zeros cannot all be found in the field.
    """
    derivative = poly_derivative(R)
    if derivative.is_zero or derivative.is_constant:
        return 0
    roots = find_roots(derivative, allow_hensel=False)
    if not roots.complete:
        return None
    return len({R(c) for c, _ in roots.exact_roots})


def verdict_thm214(P, Q):
    """
        With k critical points of R of pairwise distinct values and
        l = k - deg V + 1 > 0, nonconstant entire solutions satisfy
        deg V (deg R + 1) > (k + 1) deg R.
    """
    trace = _base_trace(P, Q)
    r, v = trace['r'], trace['v']
    k = _critical_value_count(P.num)
    trace['k'] = k
    if k is None:
        return Verdict(THM214, INCONCLUSIVE, 'UnresolvedRoots', trace)
    l = k - v + 1
    trace['l'] = l
    trace['window'] = {'low': Fraction((k + 1) * r, r + 1), 'high': r}
    if l <= 0 or v < 1:
        return Verdict(THM214, INCONCLUSIVE, 'HypothesisFails', trace)
    trace['inequality'] = _inequality(v * (r + 1), (k + 1) * r, '<=')
    if v * (r + 1) <= (k + 1) * r:
        return Verdict(THM214, RULED_OUT, '', trace)
    return Verdict(THM214, INCONCLUSIVE, 'InequalityConsistent', trace)


def verdict_cor216(P, Q):
    """
        p = deg R, q = deg V with 2 <= min(p, q), p/2 < q and q critical
        points of R with pairwise distinct values: only constant entire
        solutions.
    """
    trace = _base_trace(P, Q)
    p, q = trace['r'], trace['v']
    trace['p'], trace['q'] = p, q
    if (poly_derivative(P.num).is_zero or poly_derivative(Q.num).is_zero
            or min(p, q) < 2 or 2 * q <= p):
        return Verdict(COR216, INCONCLUSIVE, 'HypothesisFails', trace)
    k = _critical_value_count(P.num)
    trace['k'] = k
    if k is None:
        return Verdict(COR216, INCONCLUSIVE, 'UnresolvedRoots', trace)
    trace['inequality'] = _inequality(k, q, '>=')
    if k >= q:
        return Verdict(COR216, RULED_OUT, '', trace)
    return Verdict(COR216, INCONCLUSIVE, 'HypothesisFails', trace)


def verdict_degree_pattern(P, Q):
    """
        Growth at infinity forces sign(v - w) = sign(r - s) for nonconstant
        entire solutions.
    """
    trace = _base_trace(P, Q)
    left = (trace['v'] > trace['w']) - (trace['v'] < trace['w'])
    right = (trace['r'] > trace['s_deg']) - (trace['r'] < trace['s_deg'])
    trace['inequality'] = {'lhs': left, 'rhs': right, 'relation': '!='}
    if left != right:
        return Verdict(DEGREE_PATTERN, RULED_OUT, '', trace)
    return Verdict(DEGREE_PATTERN, INCONCLUSIVE, 'PatternConsistent', trace)


def verdict_mero(P, Q, setting=MERO_ON_K, report=None, **options):
    """
        Nonconstant meromorphic solutions need
        q Theta < p (k gamma(W) + 1) + q Lambda on K and the same with <=
        for unbounded ones in a disk; Theta(P) must be positive.
    """
    report = _report(P, Q, report, **options)
    trace = _base_trace(P, Q, report)
    if not report.ok:
        return Verdict(setting, INCONCLUSIVE, 'ConditionMUnverified', trace)
    try:
        facts = local_factorizations(P, report)
    except FactorizationMismatch as err:
        logger.error('ultranev.decomp.verdict_mero: %s', err)
        return Verdict(setting, INCONCLUSIVE, 'FactorizationMismatch', trace)
    p, q, k = P.degree, Q.degree, report.k
    th = theta(P, facts)
    gamma_w = distinct_zero_count(Q.den)
    lam = lambda_class(P, Q)
    trace.update({'s': [f.s for f in facts], 'theta': th, 'gammaW': gamma_w,
                  'lambda': {'case': lam.case, 'value': lam.value}})
    if th <= 0:
        return Verdict(setting, INCONCLUSIVE, 'ThetaNotPositive', trace)
    lhs = q * th
    rhs = p * (k * gamma_w + 1) + q * lam.value
    relation = '>=' if setting == MERO_ON_K else '>'
    trace['inequality'] = _inequality(lhs, rhs, relation)
    if _holds(lhs, rhs, relation):
        return Verdict(setting, RULED_OUT, '', trace)
    return Verdict(setting, INCONCLUSIVE, 'InequalityConsistent', trace)


def verdict(P, Q, setting, report=None, **options):
    """
        Runs one setting given by its CLI name or setting name.
    """
    setting = SETTINGS.get(setting, setting)
    if setting in (ENTIRE_ON_K, ANALYTIC_UNBOUNDED_DISK):
        return verdict_entire(P, Q, setting, report, **options)
    if setting in (MERO_ON_K, MERO_UNBOUNDED_DISK):
        return verdict_mero(P, Q, setting, report, **options)
    if setting == THM214:
        return verdict_thm214(P, Q)
    if setting == COR216:
        return verdict_cor216(P, Q)
    if setting == DEGREE_PATTERN:
        return verdict_degree_pattern(P, Q)
    raise ValueError(f'ultranev.decomp.verdict: unknown setting {setting!r}')


def verdict_all(P, Q, report=None, **options):
    """
        Every setting, each reported separately.
    """
    report = _report(P, Q, report, **options)
    return [verdict(P, Q, setting, report) for setting in SETTINGS.values()]


def monotone(disk, whole):
    """
        A disk-setting RuledOut must come with a RuledOut on K for the same
        pair, since the disk inequality is the strict one.
    """
    return not disk.ruled_out or whole.ruled_out


def trace_conclusion(trace):
    """
        Replays the decisive inequality of a trace.

        :return: True when it says RuledOut, None when the trace has none
    """
    inequality = trace.get('inequality')
    if inequality is None:
        return None
    lhs, rhs, relation = (inequality['lhs'], inequality['rhs'],
                          inequality['relation'])
    if relation == '!=':
        return lhs != rhs
    if relation == '<=':
        return lhs <= rhs
    return _holds(lhs, rhs, relation)


def describe(verdicts):
    return {v.setting: v.label for v in verdicts}

