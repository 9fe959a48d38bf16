"""
    Condition (M) on a pair of rational maps P = R/S, Q = V/W.

    Clauses:
        1. P'Q' is not identically zero
        2. (R, S) = 1, (V, W) = 1, V and W monic
        3. k > 0, and for every critical point c_i and every zero d of
           V' - W'P(c_i): Q(d) != P(c_i) and W(d) != 0
        4. the critical values P(c_i) are pairwise distinct
        5. if deg V = deg W, P(c_i) differs from the leading ratio of Q

    Every clause evaluates to yes, no, precision (verified on p-adic
    approximations) or unknown (roots could not be found).
"""
import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from ultranev.algebra.field import FieldElem
from ultranev.algebra.padic import ApproxRoot, PadicApprox
from ultranev.algebra.poly import (critical_numerator, distinct_zero_count,
                                   poly_derivative, poly_gcd, ratmap_eval)
from ultranev.algebra.roots import RootSet, find_roots
from ultranev.util import to_fraction

logger = logging.getLogger(__name__)

YES = 'Yes'
NO = 'No'
YES_AT_PRECISION = 'YesAtPrecision'
INCONCLUSIVE = 'Inconclusive'

CLAUSE_YES = 'yes'
CLAUSE_NO = 'no'
CLAUSE_PRECISION = 'precision'
CLAUSE_UNKNOWN = 'unknown'


@dataclass(frozen=True)
class ClauseResult:
    clause: int
    status: str
    note: str = ''


@dataclass(frozen=True)
class DCheck:
    """
        One zero d of H_i = V' - W'P(c_i) and the clause (3) comparisons made
        at it. q_differs and w_nonzero are True, False or None (undecided at
        working precision).
    """
    index: int
    d: object
    multiplicity: int
    q_value: object
    w_value: object
    q_differs: Optional[bool]
    w_nonzero: Optional[bool]

    @property
    def passed(self):
        return self.q_differs is True and self.w_nonzero is True

    def to_json(self):
        return {
            'i': self.index,
            'd': str(self.d),
            'multiplicity': self.multiplicity,
            'Q(d)': None if self.q_value is None else str(self.q_value),
            'W(d)': str(self.w_value),
            'Q(d) != P(c_i)': self.q_differs,
            'W(d) != 0': self.w_nonzero,
        }


@dataclass(frozen=True)
class ConditionMReport:
    """
        Outcome of check_condition_M with every intermediate value.
    """
    satisfied: str
    failing_clause: Optional[int]
    digits: Optional[int]
    clauses: tuple
    k: int
    critical_points: RootSet
    critical_values: tuple
    d_checks: tuple
    monic_normalization_note: str
    certificates: tuple = ()
    p_map: object = field(default=None, compare=False, repr=False)
    q_map: object = field(default=None, compare=False, repr=False)

    @property
    def label(self):
        if self.satisfied == NO:
            return f'No({self.failing_clause})'
        if self.satisfied == YES_AT_PRECISION:
            return f'YesAtPrecision({self.digits})'
        if self.satisfied == INCONCLUSIVE:
            return 'Inconclusive(unresolved roots)'
        return YES

    @property
    def ok(self):
        return self.satisfied == YES

    def critical_pairs(self):
        """
            (c_i, P(c_i)) in report order.
        """
        points = ([root for root, _ in self.critical_points.exact_roots]
                  + list(self.critical_points.approx_roots))
        return list(zip(points, self.critical_values))

    def to_json(self):
        return {
            'satisfied': self.label,
            'k': self.k,
            'clauses': [{'clause': c.clause, 'status': c.status,
                         'note': c.note} for c in self.clauses],
            'critical_points': self.critical_points.to_json(),
            'critical_values': [str(value) for value in self.critical_values],
            'd_checks': [check.to_json() for check in self.d_checks],
            'certificates': list(self.certificates),
            'monic_normalization_note': self.monic_normalization_note,
        }


def padic_value(value, prime):
    """
        Exact rationals, FieldElems over QQ and approximate roots as
        PadicApprox.
    """
    if isinstance(value, PadicApprox):
        return value
    if isinstance(value, ApproxRoot):
        return value.as_padic()
    if isinstance(value, FieldElem):
        return PadicApprox.exact(to_fraction(value.raw), prime)
    return PadicApprox.exact(value, prime)


def padic_eval(poly, point, prime):
    """
        Horner evaluation of a polynomial over QQ at a p-adic approximation.
    """
    point = padic_value(point, prime)
    result = PadicApprox.exact(0, prime)
    for coeff in reversed(poly.raw_coeffs()):
        result = result * point + to_fraction(coeff)
    return result


def _compare(left, right, prime):
    """
        True when left != right is certain, False when they are equal, None
        when undecided.
    """
    if isinstance(left, FieldElem) and isinstance(right, FieldElem):
        return left != right
    return padic_value(left, prime).differs_from(padic_value(right, prime))


def _status(decisions):
    """
        Folds per-comparison decisions (True = holds exactly, 'precision',
        False = fails, None = undecided) into one clause status.
    """
    decisions = list(decisions)
    if any(d is False for d in decisions):
        return CLAUSE_NO
    if any(d is None for d in decisions):
        return CLAUSE_UNKNOWN
    if any(d == CLAUSE_PRECISION for d in decisions):
        return CLAUSE_PRECISION
    return CLAUSE_YES


def _decision(result, exact):
    if result is True and not exact:
        return CLAUSE_PRECISION
    return result


def _is_exact(value):
    return isinstance(value, FieldElem)


def _critical_value(P, point, prime):
    if isinstance(point, FieldElem):
        return ratmap_eval(P, point)
    num = padic_eval(P.num, point, prime)
    den = padic_eval(P.den, point, prime)
    return num / den


def _clause_three_exact(i, kappa, Q, precision, hints, allow_hensel,
                        certificates):
    """
        d-checks for an exact critical value kappa.
    """
    owner = Q.owner
    V, W = Q.num, Q.den
    H = poly_derivative(V) - poly_derivative(W) * kappa
    if H.is_zero:
        certificates.append(f'i={i}: V\' - W\'P(c_i) vanishes identically')
        return [], [False]
    G = V - W * kappa
    if not poly_gcd(H, G).is_constant:
        certificates.append(f'i={i}: gcd(V\' - W\'P(c_i), V - P(c_i)W) = '
                            f'{poly_gcd(H, G)}')
        decisive = False
    elif not poly_gcd(H, W).is_constant:
        certificates.append(f'i={i}: gcd(V\' - W\'P(c_i), W) = '
                            f'{poly_gcd(H, W)}')
        decisive = False
    else:
        certificates.append(f'i={i}: V\' - W\'P(c_i) is coprime to '
                            f'V - P(c_i)W and to W')
        decisive = True
    if H.is_constant:
        return [], [decisive]

    roots = find_roots(H, precision, hints, allow_hensel)
    checks, decisions = [], [decisive]
    prime = owner.prime
    for d, mult in roots.exact_roots:
        w_value = W(d)
        w_nonzero = not w_value.is_zero
        q_value = V(d) / w_value if w_nonzero else None
        q_differs = (q_value != kappa) if w_nonzero else None
        checks.append(DCheck(i, d, mult, q_value, w_value, q_differs,
                             w_nonzero))
        decisions.append(w_nonzero and q_differs)
    for d in roots.approx_roots:
        w_value = padic_eval(W, d, prime)
        w_nonzero = w_value.certainly_nonzero() or None
        g_value = padic_eval(G, d, prime)
        q_differs = g_value.certainly_nonzero() or None
        q_value = (padic_eval(V, d, prime) / w_value) if w_nonzero else None
        checks.append(DCheck(i, d, d.multiplicity, q_value, w_value,
                             q_differs, w_nonzero))
        decisions.append(_decision(bool(w_nonzero and q_differs) or None,
                                   False))
    if not roots.all_listed:
        decisions.append(None)
    return checks, decisions


def _clause_three_approx(i, kappa, Q, prime):
    """
        d-checks for an approximate critical value; only H_i of degree at
        most one is handled.
    """
    V, W = Q.num, Q.den
    dV, dW = poly_derivative(V), poly_derivative(W)
    length = max(len(dV.raw_coeffs()), len(dW.raw_coeffs()))
    coeffs = []
    for j in range(length):
        coeffs.append(PadicApprox.exact(to_fraction(dV.coeff(j).raw), prime)
                      - kappa * to_fraction(dW.coeff(j).raw))
    while coeffs and coeffs[-1].value == 0 and coeffs[-1].absprec is None:
        coeffs.pop()
    if not coeffs:
        return [], [False]
    if not coeffs[-1].certainly_nonzero():
        return [], [None]
    if len(coeffs) == 1:
        return [], [CLAUSE_PRECISION]
    if len(coeffs) > 2:
        return [], [None]
    d = -coeffs[0] / coeffs[1]
    w_value = padic_eval(W, d, prime)
    w_nonzero = w_value.certainly_nonzero() or None
    g_value = padic_eval(V, d, prime) - kappa * w_value
    q_differs = g_value.certainly_nonzero() or None
    q_value = (padic_eval(V, d, prime) / w_value) if w_nonzero else None
    check = DCheck(i, d, 1, q_value, w_value, q_differs, w_nonzero)
    return [check], [_decision(bool(w_nonzero and q_differs) or None, False)]


def check_condition_M(P, Q, hints=(), precision=24, allow_hensel=True):
    """
        Evaluates the five clauses of Condition (M).

        :param P RatMap: P = R/S, normalized
        :param Q RatMap: Q = V/W, normalized with role Q
        :param hints iterable: candidate roots (FieldElem) used as
            certificates for critical points and for the zeros d
        :param precision int: Hensel digits
        :param allow_hensel bool: fall back to p-adic approximation
        :return: ConditionMReport
    """
    owner = P.owner
    prime = owner.prime
    clauses, certificates = [], []

    numerator = critical_numerator(P)
    q_numerator = critical_numerator(Q)
    ok = not numerator.is_zero and not q_numerator.is_zero
    clauses.append(ClauseResult(1, CLAUSE_YES if ok else CLAUSE_NO,
                                '' if ok else "P'Q' vanishes identically"))

    coprime = (poly_gcd(P.num, P.den).is_constant
               and poly_gcd(Q.num, Q.den).is_constant)
    monic = P.den.leading_coeff == 1 and Q.den.leading_coeff == 1
    clauses.append(ClauseResult(2, CLAUSE_YES if coprime and monic
                                else CLAUSE_NO, Q.monic_note))

    if not ok:
        roots = RootSet(0, complete=True)
        k = 0
    else:
        roots = find_roots(numerator, precision, hints, allow_hensel)
        k = distinct_zero_count(numerator)
    points = ([root for root, _ in roots.exact_roots]
              + list(roots.approx_roots))
    values = tuple(_critical_value(P, c, prime) for c in points)
    logger.debug('ultranev.decomp.check_condition_M: k=%d, %d critical '
                 'points found', k, len(points))

    d_checks, decisions = [], []
    if k == 0:
        decisions.append(False)
        certificates.append("P' has no zeros")
    for i, kappa in enumerate(values, start=1):
        if _is_exact(kappa):
            checks, found = _clause_three_exact(i, kappa, Q, precision, hints,
                                                allow_hensel, certificates)
        else:
            checks, found = _clause_three_approx(i, kappa, Q, prime)
        d_checks.extend(checks)
        decisions.extend(found)
    if not roots.all_listed:
        decisions.append(None)
    clauses.append(ClauseResult(3, _status(decisions)))

    decisions = []
    for left, right in combinations(values, 2):
        exact = _is_exact(left) and _is_exact(right)
        decisions.append(_decision(_compare(left, right, prime), exact))
    if not roots.all_listed:
        decisions.append(None)
    clauses.append(ClauseResult(4, _status(decisions)))

    if Q.num.degree == Q.den.degree:
        ratio = (Q.leading_ratio if Q.leading_ratio is not None
                 else Q.num.leading_coeff)
        decisions = [_decision(_compare(kappa, ratio, prime), _is_exact(kappa))
                     for kappa in values]
        if not roots.all_listed:
            decisions.append(None)
        clauses.append(ClauseResult(5, _status(decisions),
                                    f'compared with leading ratio {ratio}'))
    else:
        clauses.append(ClauseResult(5, CLAUSE_YES, 'deg V != deg W'))

    statuses = [c.status for c in clauses]
    failing = next((c.clause for c in clauses if c.status == CLAUSE_NO), None)
    if failing is not None:
        satisfied = NO
    elif CLAUSE_UNKNOWN in statuses:
        satisfied = INCONCLUSIVE
    elif CLAUSE_PRECISION in statuses:
        satisfied = YES_AT_PRECISION
    else:
        satisfied = YES
    report = ConditionMReport(satisfied, failing,
                              precision if satisfied == YES_AT_PRECISION
                              else None,
                              tuple(clauses), k, roots, values,
                              tuple(d_checks), Q.monic_note,
                              tuple(certificates), P, Q)
    logger.info('ultranev.decomp.check_condition_M: %s', report.label)
    return report
