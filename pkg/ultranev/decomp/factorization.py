"""
    Local factorizations P - P(c_i) = (x - c_i)^s_i * A_i / S at the critical
    points, the multiset certificate on the zeros of V - P(c_i)W, and
    Theta(P) = sum(s_i - 2).
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from ultranev.algebra.field import FieldElem
from ultranev.algebra.poly import (Poly, poly_derivative, poly_gcd,
                                   poly_multiplicity, poly_resultant)
from ultranev.errors import FactorizationMismatch

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalFactorization:
    """
        Data of the critical point c_i: R - P(c_i)S = (x - c_i)^s * A, B = S.
        A is None when c_i is only known approximately.
    """
    index: int
    critical_point: object
    critical_value: object
    s: int
    A: Optional[Poly]
    B: Poly
    squarefree: Optional[bool] = None
    coprime_to_w: Optional[bool] = None

    @property
    def exact(self):
        return self.A is not None

    def to_json(self):
        return {
            'i': self.index,
            'c': str(self.critical_point),
            'P(c)': str(self.critical_value),
            's': self.s,
            'A': None if self.A is None else str(self.A),
            'B': str(self.B),
            'squarefree': self.squarefree,
            'coprime_to_W': self.coprime_to_w,
        }


def _check(condition, message):
    if not condition:
        raise FactorizationMismatch(f'ultranev.decomp.local_factorizations: '
                                    f'{message}')


def _exact_factorization(P, Q, index, c, kappa):
    R, S = P.num, P.den
    rest = R - S * kappa
    s, A = poly_multiplicity(rest, c)
    linear = Poly.linear(P.owner, c)
    _check(s >= 2, f's_{index} = {s} < 2 at c = {c}')
    _check(not A(c).is_zero, f'A_{index}(c_{index}) = 0')
    _check(linear ** s * A + S * kappa == R,
           f'(x - c_{index})^{s} A_{index} + P(c_{index}) S != R')
    _check(A.degree <= P.degree - s,
           f'deg A_{index} = {A.degree} exceeds {P.degree} - {s}')
    V, W = Q.num, Q.den
    G = V - W * kappa
    squarefree = poly_gcd(G, poly_derivative(G)).is_constant
    coprime = poly_gcd(G, W).is_constant
    _check(squarefree, f'V - P(c_{index})W is not squarefree')
    _check(coprime, f'V - P(c_{index})W shares a zero with W')
    return LocalFactorization(index, c, kappa, s, A, S, squarefree, coprime)


def local_factorizations(P, report):
    """
        Computes s_i and A_i at every critical point of a report whose
        Condition (M) holds, and verifies the identities and bounds they
        satisfy together with the distinctness of the zeros of the
        polynomials V - P(c_i)W.

        :param P RatMap: the map P of the report
        :param report ConditionMReport: Yes or YesAtPrecision
        :return: list of LocalFactorization
    """
    Q = report.q_map
    facts = []
    for index, (c, kappa) in enumerate(report.critical_pairs(), start=1):
        if isinstance(c, FieldElem):
            facts.append(_exact_factorization(P, Q, index, c, kappa))
            continue
        # approximate point: s from the multiplicity in the critical numerator
        facts.append(LocalFactorization(index, c, kappa, c.multiplicity + 1,
                                        None, P.den))

    exact = [f for f in facts if f.exact]
    V, W = Q.num, Q.den
    for first, second in combinations(exact, 2):
        G1 = V - W * first.critical_value
        G2 = V - W * second.critical_value
        _check(G1 - G2 == W * (second.critical_value - first.critical_value),
               'V - P(c_i)W differences are not multiples of W')
        _check(not poly_resultant(G1, G2).is_zero,
               f'V - P(c_{first.index})W and V - P(c_{second.index})W share '
               f'a zero')
    logger.debug('ultranev.decomp.local_factorizations: s = %s, %d of %d '
                 'points exact', [f.s for f in facts], len(exact), len(facts))
    return facts


def multiset_size(Q, facts):
    """
        Total degree of the polynomials V - P(c_i)W; once the certificate
        passed their zeros b_ij are pairwise distinct.
    """
    return sum(int((Q.num - Q.den * f.critical_value).degree)
               for f in facts if f.exact)


def theta(P, facts):
    """
        Theta(P) = sum(s_i - 2).
    """
    return sum(f.s - 2 for f in facts)
