"""
    Seeded random instances for the property suites: products of linear
    factors with known root valuations, divisors, rational maps and
    Theorem N inputs.
"""
import logging
from collections import namedtuple
from fractions import Fraction

import numpy as np

from ultranev.algebra.field import FieldBuilder
from ultranev.algebra.poly import P_ROLE, Poly, ratmap_normalize
from ultranev.series.mero import (Divisor, DivisorEntry, mero_from_ratmap)
from ultranev.series.newton import CLOSED

logger = logging.getLogger(__name__)

SampledPoly = namedtuple('SampledPoly', ['poly', 'log_radii'])
SampledMero = namedtuple('SampledMero', ['function', 'zeros', 'poles'])
TheoremNInstance = namedtuple('TheoremNInstance', ['function', 'alphas',
                                                   'degree'])


def make_rng(seed=0):
    return np.random.default_rng(seed)


def half_integer_field(prime=5):
    """
        QQ(w), w^2 = prime, where v(w) = 1/2, so roots of any half-integer
        valuation are available as unit multiples of powers of w.
    """
    return (FieldBuilder(prime)
            .with_extension('w', [-prime, 0, 1], Fraction(1, 2))
            .get_result())


def random_unit(rng, prime, bound=None):
    """
        Nonzero integer prime to p with random sign.
    """
    bound = bound or prime * prime
    while True:
        value = int(rng.integers(1, bound))
        if value % prime:
            return value if rng.random() < 0.5 else -value


def random_linear_product(rng, field, max_degree=8, max_exponent=4):
    """
        Product of 1..max_degree factors x - u w^k with u a unit and
        |k| <= max_exponent, so the root valuations are k/2.

        :param rng Generator: numpy random generator
        :param field FieldSpec: a field from half_integer_field
        :return: SampledPoly(poly, log_radii) with log_radii = -k/2
    """
    w = field.generator()
    degree = int(rng.integers(1, max_degree + 1))
    poly = Poly(field, [1])
    log_radii = []
    for _ in range(degree):
        exponent = int(rng.integers(-max_exponent, max_exponent + 1))
        root = w ** exponent * random_unit(rng, field.prime)
        poly = poly * Poly.linear(field, root)
        log_radii.append(Fraction(-exponent, 2))
    return SampledPoly(poly, sorted(log_radii))


def expected_zero_count(log_radii, t, boundary=CLOSED):
    t = Fraction(t)
    if boundary == CLOSED:
        return sum(1 for radius in log_radii if radius <= t)
    return sum(1 for radius in log_radii if radius < t)


def half_integer_grid(low=-3, high=3):
    return [Fraction(k, 2) for k in range(2 * low, 2 * high + 1)]


def random_divisor(rng, max_size=5, max_radius=2, max_multiplicity=3):
    """
        Fully certified divisor with up to max_size entries at integer
        log-radii.
    """
    size = int(rng.integers(0, max_size + 1))
    entries = []
    for _ in range(size):
        radius = Fraction(int(rng.integers(-max_radius, max_radius + 1)))
        multiplicity = int(rng.integers(1, max_multiplicity + 1))
        if rng.random() < 0.5:
            multiplicity = -multiplicity
        entries.append(DivisorEntry(radius, multiplicity))
    return Divisor(tuple(entries))


def _rational_root(rng, prime, max_exponent):
    exponent = int(rng.integers(-max_exponent, max_exponent + 1))
    return Fraction(random_unit(rng, prime)) * Fraction(prime) ** exponent


def random_mero(rng, field, max_size=5, max_exponent=2):
    """
        f = prod(x - a) / prod(x - b) with nonzero, pairwise distinct
        rational roots, at least one of them, and at most max_size in total.
    """
    size = int(rng.integers(1, max_size + 1))
    roots = set()
    while len(roots) < size:
        roots.add(_rational_root(rng, field.prime, max_exponent))
    roots = sorted(roots)
    rng.shuffle(roots)
    split = int(rng.integers(1, size + 1))
    zeros, poles = roots[:split], roots[split:]
    num, den = Poly(field, [1]), Poly(field, [1])
    for root in zeros:
        num = num * Poly.linear(field, root)
    for root in poles:
        den = den * Poly.linear(field, root)
    f = mero_from_ratmap(ratmap_normalize(num, den))
    return SampledMero(f, zeros, poles)


def _random_coeffs(rng, field, count, max_coeff, generator_degree):
    if not generator_degree:
        return [int(c) for c in rng.integers(-max_coeff, max_coeff + 1, count)]
    gen = field.generator()
    table = rng.integers(-max_coeff, max_coeff + 1,
                         (count, generator_degree + 1))
    return [sum((int(c) * gen ** j for j, c in enumerate(row)), field.zero)
            for row in table]


def random_ratmap(rng, field, max_degree=3, max_coeff=6, role=P_ROLE,
                  generator_degree=0):
    """
        Rational map of degree 1..max_degree with small integer coefficients,
        or with polynomials of degree generator_degree in the field generator
        as coefficients.
    """
    while True:
        num_degree = int(rng.integers(0, max_degree + 1))
        den_degree = int(rng.integers(0, max_degree + 1))
        if max(num_degree, den_degree) == 0:
            continue
        num = Poly(field, _random_coeffs(rng, field, num_degree + 1,
                                         max_coeff, generator_degree))
        den = Poly(field, _random_coeffs(rng, field, den_degree + 1,
                                         max_coeff, generator_degree))
        if num.is_zero or den.is_zero:
            continue
        L = ratmap_normalize(num, den, role)
        if L.degree >= 1:
            return L


def random_theorem_n_instance(rng, field, max_degree=4, max_targets=3):
    """
        Entire polynomial f with f(0) != 0 and 2..max_targets distinct
        integer targets different from f(0).
    """
    degree = int(rng.integers(1, max_degree + 1))
    f = Poly(field, [1])
    for _ in range(degree):
        f = f * Poly.linear(field, _rational_root(rng, field.prime, 1))
    value_at_zero = f.coeff(0)
    count = int(rng.integers(2, max_targets + 1))
    alphas = []
    while len(alphas) < count:
        alpha = field.element(int(rng.integers(-20, 21)))
        if alpha != value_at_zero and alpha not in alphas:
            alphas.append(alpha)
    function = mero_from_ratmap(ratmap_normalize(f, Poly(field, [1])))
    logger.debug('ultranev.sampling: theorem N instance of degree %d with %d '
                 'targets', degree, count)
    return TheoremNInstance(function, alphas, degree)
