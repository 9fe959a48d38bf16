from fractions import Fraction

import pytest

from ultranev.algebra import P_ROLE, Q_ROLE, Poly, ratmap_from_poly
from ultranev.decomp import LocalFactorization
from ultranev.errors import (BeyondCertifiedRadius, HypothesisViolated,
                             NotASolutionPair, UncertifiedDivisor)
from ultranev.exactnum import plf_eventual_slope
from ultranev.nevanlinna import (BOUNDED_TYPE, HOLDS_EVENTUALLY,
                                 INCONCLUSIVE_AT_ORDER,
                                 INCONCLUSIVE_WITHIN_RADIUS, UNBOUNDED_TYPE,
                                 NevBundle, check_degree_identity,
                                 check_factorization_identity,
                                 check_lambda_bound, check_pq_relation,
                                 check_theorem_N, classify_boundedness,
                                 classify_divisor_boundedness,
                                 counting_function, nev_evaluate,
                                 nev_from_divisor, nev_from_mero)
from ultranev.sampling import (random_mero, random_ratmap,
                               random_theorem_n_instance)
from ultranev.series import (Divisor, DivisorEntry, MeroRep, TruncSeries,
                             mero_pow, parse_divisor, parse_function)


def test_counting_function_folds_points_before_start():
    Z = counting_function([(Fraction(-1), 2), (Fraction(1), 1)], 0, 0, None)
    assert Z(0) == 2
    assert Z(1) == 4
    assert Z(3) == 10


def test_zero_at_origin(qq5):
    bundle = nev_from_mero(MeroRep(TruncSeries(qq5, [0, 1])))
    assert bundle.Z(2) == 2
    assert bundle.T(2) == 2
    assert bundle.N(2) == 0


def test_multiple_zero_at_origin(qq5):
    bundle = nev_from_mero(MeroRep(TruncSeries(qq5, [0, 0, 0, 1])))
    assert bundle.Z(2) == 6
    assert bundle.Ztilde(2) == 2


def test_tilde_counts_char_p_square(gf3t):
    bundle = nev_from_mero(MeroRep(TruncSeries(gf3t, [1, 2, 1])))
    assert bundle.source.multiplicity_resolved
    assert plf_eventual_slope(bundle.Z) == 2
    assert plf_eventual_slope(bundle.Ztilde) == 1
    T = gf3t.generator()
    shifted = nev_from_mero(MeroRep(TruncSeries(gf3t, [T ** 2, T, 1])))
    assert shifted.Z(0) == 2
    assert shifted.Ztilde(0) == 1
    assert plf_eventual_slope(shifted.Z) == 2
    assert plf_eventual_slope(shifted.Ztilde) == 1


def test_inseparable_zero_counts_once(gf3t):
    T = gf3t.generator()
    bundle = nev_from_mero(MeroRep(TruncSeries(gf3t, [-T, 0, 0, 1])))
    assert bundle.source.entries == (DivisorEntry(Fraction(-1, 3), 3),)
    assert plf_eventual_slope(bundle.Z) == 3
    assert plf_eventual_slope(bundle.Ztilde) == 1


def test_origin_zero_and_pole(qq5):
    bundle = nev_from_divisor(parse_divisor('origin; pole@1'))
    assert bundle.N(Fraction(1, 2)) == 0
    assert bundle.N(3) == 2
    assert bundle.T(3) == 3
    assert nev_evaluate(bundle, 3) == {'Z': '3', 'N': '2', 'T': '3',
                                       'Zt': '3', 'Nt': '2'}
    assert NevBundle.from_json(bundle.to_json()) == bundle


def test_bundle_of_rational_function(qq5):
    bundle = nev_from_mero(parse_function(qq5, 'x^2*(x - 5)/(x - 1/5)'))
    assert bundle.Z(0) == 1
    assert plf_eventual_slope(bundle.Z) == 3
    assert plf_eventual_slope(bundle.N) == 1
    assert bundle.domain == (0, None)


def test_bundle_stops_at_certified_radius():
    bundle = nev_from_divisor(parse_divisor('zero@0; cert@2'))
    assert bundle.domain == (0, 2)
    with pytest.raises(UncertifiedDivisor):
        nev_from_divisor(parse_divisor('cert@-1'))


def test_theorem_n_two_targets(qq5):
    f = MeroRep(TruncSeries(qq5, [1, 1]))
    report = check_theorem_N(f, [2, 3])
    assert report.verdict == HOLDS_EVENTUALLY
    assert report.slack_slope == 0
    assert report.n == 2
    assert report.to_json()['verdict'] == HOLDS_EVENTUALLY


def test_theorem_n_hypotheses(qq5):
    f = MeroRep(TruncSeries(qq5, [1, 1]))
    with pytest.raises(HypothesisViolated) as err:
        check_theorem_N(f, [2])
    assert err.value.which == 'n>=2'
    with pytest.raises(HypothesisViolated) as err:
        check_theorem_N(f, [2, 2])
    assert err.value.which == 'distinct'
    with pytest.raises(HypothesisViolated) as err:
        check_theorem_N(f, [1, 2])
    assert err.value.which == 'f(0)!=alpha'
    with pytest.raises(HypothesisViolated) as err:
        check_theorem_N(MeroRep(TruncSeries(qq5, [0, 1])), [1, 2])
    assert err.value.which == 'f(0)'


def test_theorem_n_on_truncated_series(qq5):
    f = MeroRep(TruncSeries(qq5, [1, 1, 1], 3, 3))
    report = check_theorem_N(f, [2, 3])
    assert report.verdict == INCONCLUSIVE_WITHIN_RADIUS
    assert report.lhs.domain_end is not None


def test_theorem_n_random_polynomials(qq5, rng):
    for _ in range(20):
        instance = random_theorem_n_instance(rng, qq5)
        report = check_theorem_N(instance.function, instance.alphas)
        assert report.verdict == HOLDS_EVENTUALLY
        assert report.slack_slope >= 0


def test_degree_identity(qq5):
    square = ratmap_from_poly(Poly(qq5, [0, 0, 1]))
    f = parse_function(qq5, '1/(1 - x)')
    comparison = check_degree_identity(square, f)
    assert comparison.lhs_slope == 2
    assert comparison.slopes_equal
    assert comparison.bounded and comparison.conclusive
    with pytest.raises(HypothesisViolated):
        check_degree_identity(square, MeroRep(TruncSeries(qq5, [3])))


def test_degree_identity_random(qq5, rng):
    for _ in range(20):
        L = random_ratmap(rng, qq5)
        f = random_mero(rng, qq5).function
        comparison = check_degree_identity(L, f)
        assert comparison.slopes_equal
        assert comparison.lhs_slope == L.degree * plf_eventual_slope(
            nev_from_mero(f).T)


def _solution_pair(field):
    P = ratmap_from_poly(Poly(field, [0, 0, 1]))
    Q = ratmap_from_poly(Poly(field, [0, 1]), Q_ROLE)
    f = parse_function(field, '1/(1 - x)')
    return P, Q, f, mero_pow(f, 2)


def test_pq_relation(qq5):
    P, Q, f, g = _solution_pair(qq5)
    comparison = check_pq_relation(P, Q, f, g)
    assert comparison.slopes_equal
    assert comparison.lhs_slope == 2
    with pytest.raises(NotASolutionPair) as err:
        check_pq_relation(P, Q, f, f)
    assert err.value.index == 1


def test_lambda_bound(qq5):
    P, Q, f, g = _solution_pair(qq5)
    report = check_lambda_bound(P, Q, f, g)
    assert report.case == 4
    assert report.value == 1
    assert report.ntilde_slope == 1
    assert report.holds and report.conclusive


def test_boundedness_classes(qq5):
    assert classify_boundedness(parse_function(qq5, '1/(1 - x)'), 1) == \
        BOUNDED_TYPE
    accumulating = Divisor((DivisorEntry(Fraction(0), 1),
                            DivisorEntry(Fraction(1, 2), 1),
                            DivisorEntry(Fraction(3, 4), 1)),
                           certified_t=Fraction(7, 8))
    assert classify_divisor_boundedness(accumulating, 1) == UNBOUNDED_TYPE
    sparse = Divisor((DivisorEntry(Fraction(0), 1),),
                     certified_t=Fraction(1, 2))
    assert classify_divisor_boundedness(sparse, 1) == INCONCLUSIVE_AT_ORDER


def test_factorization_identity(qq5):
    P = ratmap_from_poly(Poly(qq5, [0, -3, 0, 1]), P_ROLE)
    fact = LocalFactorization(1, qq5.element(1), qq5.element(-2), 2,
                              Poly(qq5, [2, 1]), Poly(qq5, [1]))
    f = parse_function(qq5, '1/(1 - x)')
    check = check_factorization_identity(P, fact, f)
    assert check.mismatch_at is None
    assert check.lhs_slope == check.rhs_slope == 3
    assert check.holds


def test_common_domain_must_be_nonempty(qq5):
    f = MeroRep(TruncSeries(qq5, [1, 1, 1], 3, 0))
    with pytest.raises(BeyondCertifiedRadius):
        check_theorem_N(f, [2, 3], t_start=1)
