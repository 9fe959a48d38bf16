"""
    Polynomials and normalized rational functions over a FieldSpec.

    Poly is a thin immutable wrapper around a univariate sympy Poly whose
    domain is the owner's sympy domain; all algebra (division, gcd,
    squarefree decomposition, resultants) is delegated to sympy.
"""
import logging

from sympy import Poly as SymPoly
from sympy import S
from sympy.polys.polyerrors import ExactQuotientFailed

from ultranev.algebra.field import X, FieldElem
from ultranev.errors import (FieldError, NotAChiPower, PoleAtPoint,
                             ZeroDenominator, ZeroPolynomial)

logger = logging.getLogger(__name__)

DEGREE_OF_ZERO = S.NegativeInfinity

P_ROLE = 'P'
Q_ROLE = 'Q'


class Poly:
    """
        Immutable univariate polynomial in x over a FieldSpec.

        :param owner FieldSpec: coefficient field
        :param coeffs iterable: coefficients, lowest degree first; anything
            owner.raw accepts
    """

    __slots__ = ('_owner', '_poly')

    def __init__(self, owner, coeffs=()):
        raws = [owner.raw(c) for c in coeffs]
        self._owner = owner
        self._poly = SymPoly.from_list(list(reversed(raws)) or
                                       [owner.domain.zero], X,
                                       domain=owner.domain)

    @classmethod
    def wrap(cls, owner, sympoly):
        """
            Wraps a sympy Poly already defined over owner.domain.
        """
        poly = cls.__new__(cls)
        poly._owner = owner
        if sympoly.get_domain() != owner.domain:
            sympoly = sympoly.set_domain(owner.domain)
        poly._poly = sympoly
        return poly

    @classmethod
    def monomial(cls, owner, degree, coeff=1):
        return cls(owner, [0] * degree + [coeff])

    @classmethod
    def linear(cls, owner, root):
        """
            x - root.
        """
        return cls(owner, [-owner.element(root), 1])

    @property
    def owner(self):
        return self._owner

    @property
    def sympy(self):
        return self._poly

    def raw_coeffs(self):
        """
            Raw coefficients, lowest degree first, empty for zero.
        """
        return list(reversed(self._poly.rep.to_list()))

    @property
    def coeffs(self):
        return tuple(FieldElem(self._owner, c) for c in self.raw_coeffs())

    def coeff(self, index):
        raws = self.raw_coeffs()
        raw = raws[index] if 0 <= index < len(raws) else self._owner.domain.zero
        return FieldElem(self._owner, raw)

    @property
    def degree(self):
        """
            Degree, DEGREE_OF_ZERO (sympy -oo) for the zero polynomial.
        """
        return self._poly.degree()

    @property
    def is_zero(self):
        return self._poly.is_zero

    @property
    def is_constant(self):
        return self.is_zero or self.degree == 0

    @property
    def leading_coeff(self):
        raws = self.raw_coeffs()
        return FieldElem(self._owner, raws[-1] if raws
                         else self._owner.domain.zero)

    def low_order(self):
        """
            Index of the lowest nonzero coefficient (the order of x | self).
        """
        if self.is_zero:
            raise ZeroPolynomial('ultranev.algebra.Poly: zero polynomial has '
                                 'no lowest term')
        return next(i for i, c in enumerate(self.raw_coeffs()) if c)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other._owner != self._owner:
                raise FieldError(f'ultranev.algebra.Poly: mixing '
                                 f'{self._owner!r} and {other._owner!r}')
            return other._poly
        return Poly(self._owner, [other])._poly

    def __add__(self, other):
        return Poly.wrap(self._owner, self._poly + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return Poly.wrap(self._owner, self._poly - self._coerce(other))

    def __rsub__(self, other):
        return Poly.wrap(self._owner, self._coerce(other) - self._poly)

    def __mul__(self, other):
        return Poly.wrap(self._owner, self._poly * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return Poly.wrap(self._owner, -self._poly)

    def __pow__(self, exponent):
        return Poly.wrap(self._owner, self._poly ** exponent)

    def __divmod__(self, other):
        divisor = self._coerce(other)
        if divisor.is_zero:
            raise ZeroPolynomial('ultranev.algebra.Poly: division by the zero '
                                 'polynomial')
        quotient, remainder = self._poly.div(divisor)
        return (Poly.wrap(self._owner, quotient),
                Poly.wrap(self._owner, remainder))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exquo(self, other):
        """
            Exact quotient, None when other does not divide self.
        """
        divisor = self._coerce(other)
        if divisor.is_zero:
            raise ZeroPolynomial('ultranev.algebra.Poly: division by the zero '
                                 'polynomial')
        try:
            return Poly.wrap(self._owner, self._poly.exquo(divisor))
        except ExactQuotientFailed:
            return None

    def divides(self, other):
        return other.exquo(self) is not None

    def __call__(self, value):
        """
            Horner evaluation at a field element.
        """
        point = self._owner.raw(value)
        result = self._owner.domain.zero
        for coeff in reversed(self.raw_coeffs()):
            result = result * point + coeff
        return FieldElem(self._owner, result)

    def compose(self, inner):
        """
            self(inner(x)).
        """
        return Poly.wrap(self._owner, self._poly.compose(self._coerce(inner)))

    def monic(self):
        if self.is_zero:
            return self
        return Poly.wrap(self._owner, self._poly.monic())

    def map_coeffs(self, func):
        """
            Applies func to every raw coefficient.
        """
        return Poly(self._owner, [func(c) for c in self.raw_coeffs()])

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (self._owner == other._owner
                    and (self._poly - other._poly).is_zero)
        if isinstance(other, (int, FieldElem)):
            return self == Poly(self._owner, [other])
        return NotImplemented

    def __hash__(self):
        return hash((self._owner, str(self)))

    def __str__(self):
        terms = []
        for power, coeff in reversed(list(enumerate(self.coeffs))):
            if coeff.is_zero:
                continue
            text = str(coeff)
            if ' ' in text or (text.startswith('-') and power and
                               not text[1:].replace('/', '').isdigit()):
                text = f'({text})'
            monomial = '' if power == 0 else 'x' if power == 1 else f'x^{power}'
            if not monomial:
                terms.append(text)
            elif text == '1':
                terms.append(monomial)
            elif text == '-1':
                terms.append(f'-{monomial}')
            else:
                terms.append(f'{text}*{monomial}')
        if not terms:
            return '0'
        return ' + '.join(terms).replace('+ -', '- ')

    def __repr__(self):
        return f'Poly({self})'


def poly_derivative(a):
    """
        Formal derivative; in characteristic p the terms whose exponent is
        divisible by p vanish.
    """
    return Poly.wrap(a.owner, a.sympy.diff(X))


def poly_gcd(a, b):
    """
        Monic gcd by the exact Euclidean algorithm of sympy.

        :param a Poly: first polynomial
        :param b Poly: second polynomial
        :return: monic Poly
    """
    if a.is_zero and b.is_zero:
        raise ZeroPolynomial('ultranev.algebra.poly_gcd: both polynomials '
                             'are zero')
    return Poly.wrap(a.owner, a.sympy.gcd(b.sympy)).monic()


def poly_resultant(a, b):
    """
        Resultant of two polynomials as a FieldElem.
    """
    value = a.sympy.resultant(b.sympy)
    return FieldElem(a.owner, a.owner.domain.from_sympy(value))


def poly_multiplicity(a, root):
    """
        Multiplicity of root as a zero of a, by repeated exact division.

        :return: (multiplicity, cofactor)
    """
    if a.is_zero:
        raise ZeroPolynomial('ultranev.algebra.poly_multiplicity: zero '
                             'polynomial')
    factor = Poly.linear(a.owner, root)
    count, cofactor = 0, a
    while True:
        quotient = cofactor.exquo(factor)
        if quotient is None:
            return count, cofactor
        count, cofactor = count + 1, quotient


def poly_squarefree_part(a):
    """
        Product of the distinct irreducible factors of a (characteristic 0).
    """
    if a.is_zero:
        raise ZeroPolynomial('ultranev.algebra.poly_squarefree_part: zero '
                             'polynomial')
    if a.is_constant:
        return Poly(a.owner, [1])
    if a.owner.characteristic:
        raise FieldError('ultranev.algebra.poly_squarefree_part: only in '
                         'characteristic 0')
    return (a.exquo(poly_gcd(a, poly_derivative(a)))).monic()


def contract_exponents(a, step):
    """
        For a = C(x^step) returns C. Every exponent of a must be divisible
        by step.
    """
    raws = a.raw_coeffs()
    if any(raw for i, raw in enumerate(raws) if i % step):
        raise ValueError(f'ultranev.algebra.contract_exponents: exponents of '
                         f'{a} are not all divisible by {step}')
    return Poly(a.owner, raws[::step])


def expand_exponents(a, step):
    """
        For a = C returns C(x^step).
    """
    zero = a.owner.domain.zero
    raws = []
    for raw in a.raw_coeffs():
        raws.extend([raw] + [zero] * (step - 1))
    return Poly(a.owner, raws[:len(raws) - step + 1] if raws else [])


def separable_decomposition(a):
    """
        Splits a into separable squarefree parts with gcds only.

        Each triple (part, multiplicity, level) says that every zero beta of
        part gives exactly one distinct zero of a, the chi^level-th root of
        beta, with the given multiplicity. Factors with a vanishing
        derivative are C(x^p) and are handled on C one level up. In
        characteristic 0 every level is 0.

        :param a Poly: nonzero polynomial
        :return: list of (Poly, int, int)
    """
    if a.is_zero:
        raise ZeroPolynomial('ultranev.algebra.separable_decomposition: zero '
                             'polynomial')
    chi = a.owner.chi
    parts, level = [], 0
    while not a.is_constant:
        derivative = poly_derivative(a)
        if derivative.is_zero:
            a = contract_exponents(a, chi)
            level += 1
            continue
        rest = poly_gcd(a, derivative)
        separable = a.exquo(rest)
        index = 1
        while not separable.is_constant:
            common = poly_gcd(separable, rest)
            part = separable.exquo(common)
            if not part.is_constant:
                parts.append((part, index * chi ** level, level))
            index += 1
            separable, rest = common, rest.exquo(common)
        a = rest
    return parts


def distinct_zero_count(a):
    """
        Number of distinct zeros of a in an algebraic closure: the total
        degree of its separable parts.

        :param a Poly: nonzero polynomial
        :return: non-negative integer
    """
    if a.is_zero:
        raise ZeroPolynomial('ultranev.algebra.distinct_zero_count: zero '
                             'polynomial')
    return sum(int(part.degree) for part, _, _ in separable_decomposition(a))


def chi_root_poly(a):
    """
        Coefficientwise chi-th root: sum(a_i x^i) -> sum(root(a_i) x^i).

        :param a Poly: polynomial over a characteristic p field
        :return: Poly of the same degree
    """
    owner = a.owner
    if not owner.characteristic:
        raise FieldError('ultranev.algebra.chi_root_poly: characteristic 0 '
                         'field has chi = 1')
    roots = []
    for index, raw in enumerate(a.raw_coeffs()):
        try:
            roots.append(owner.chi_root(raw))
        except NotAChiPower as err:
            raise NotAChiPower(f'ultranev.algebra.chi_root_poly: coefficient '
                               f'of x^{index} has no {owner.chi}-th root: {err}',
                               index=index)
    return Poly(owner, roots)


def frobenius_poly(a, times=1):
    """
        Coefficientwise Frobenius sum(a_i x^i) -> sum(a_i^(chi^times) x^i),
        the inverse of chi_root_poly.
    """
    return a.map_coeffs(lambda raw: a.owner.frobenius(raw, times))


class RatMap:
    """
        Rational function num/den with coprime parts.

        :param num Poly: numerator
        :param den Poly: denominator
        :param role str: P_ROLE or Q_ROLE
        :param leading_ratio FieldElem: for Q_ROLE maps, the leading
            coefficient of num when den is monic
    """

    __slots__ = ('_num', '_den', '_role', '_leading_ratio')

    def __init__(self, num, den, role=P_ROLE, leading_ratio=None):
        self._num = num
        self._den = den
        self._role = role
        self._leading_ratio = leading_ratio

    @property
    def num(self):
        return self._num

    @property
    def den(self):
        return self._den

    @property
    def role(self):
        return self._role

    @property
    def owner(self):
        return self._num.owner

    @property
    def leading_ratio(self):
        return self._leading_ratio

    @property
    def monic_note(self):
        """
            Non-empty when num and den could not both be made monic.
        """
        if self._role != Q_ROLE or self._leading_ratio is None:
            return ''
        if self._leading_ratio == 1:
            return ''
        return (f'numerator and denominator cannot both be monic; leading '
                f'coefficient ratio {self._leading_ratio} kept')

    @property
    def r(self):
        return self._num.degree

    @property
    def s(self):
        return self._den.degree

    @property
    def degree(self):
        """
            max(deg num, deg den).
        """
        return max(int(self.r) if not self._num.is_zero else 0,
                   int(self.s))

    @property
    def is_constant(self):
        return self._num.is_constant and self._den.is_constant

    def __call__(self, value):
        return ratmap_eval(self, value)

    def __eq__(self, other):
        if not isinstance(other, RatMap):
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash((self._num, self._den))

    def __str__(self):
        if self._den == 1:
            return str(self._num)
        return f'({self._num})/({self._den})'

    def __repr__(self):
        return f'RatMap({self})'


def ratmap_normalize(num, den, role=P_ROLE):
    """
        Cancels the gcd and makes the denominator monic. For Q_ROLE maps the
        numerator's leading coefficient is recorded as leading_ratio; when it
        differs from 1 the two parts cannot both be monic and monic_note
        says so.

        :param num Poly: numerator
        :param den Poly: denominator
        :param role str: P_ROLE or Q_ROLE
        :return: RatMap
    """
    if den.is_zero:
        raise ZeroDenominator('ultranev.algebra.ratmap_normalize: zero '
                              'denominator')
    if num.is_zero:
        return RatMap(num, Poly(den.owner, [1]), role)
    common = poly_gcd(num, den)
    num, den = num.exquo(common), den.exquo(common)
    lead = den.leading_coeff
    num, den = num * (1 / lead), den * (1 / lead)
    ratio = num.leading_coeff if role == Q_ROLE else None
    result = RatMap(num, den, role, ratio)
    if result.monic_note:
        logger.info('ultranev.algebra.ratmap_normalize: %s', result.monic_note)
    return result


def ratmap_from_poly(a, role=P_ROLE):
    return ratmap_normalize(a, Poly(a.owner, [1]), role)


def ratmap_frobenius(L, times=1):
    """
        num and den with every coefficient raised to chi^times. Coprimality
        and the monic denominator carry over.
    """
    ratio = L.leading_ratio
    if ratio is not None:
        ratio = ratio.frobenius(times)
    return RatMap(frobenius_poly(L.num, times), frobenius_poly(L.den, times),
                  L.role, ratio)


def ratmap_eval(L, value):
    """
        Exact value num(x)/den(x).
    """
    den = L.den(value)
    if den.is_zero:
        raise PoleAtPoint(f'ultranev.algebra.ratmap_eval: {L} has a pole at '
                          f'{value}')
    return L.num(value) / den


def ratmap_derivative(L):
    """
        (num' den - num den') / den^2, normalized.
    """
    num = poly_derivative(L.num) * L.den - L.num * poly_derivative(L.den)
    return ratmap_normalize(num, L.den * L.den, L.role)


def critical_numerator(L):
    """
        Polynomial whose zeros are exactly the zeros of L': the numerator
        of L' with the factors shared with den^2 removed.
    """
    num = poly_derivative(L.num) * L.den - L.num * poly_derivative(L.den)
    if num.is_zero:
        return num
    return num.exquo(poly_gcd(num, L.den * L.den))
