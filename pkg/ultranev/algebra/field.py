"""
    Computable valued coefficient fields.

    A FieldSpec wraps one of three sympy domains:

    - QQ with the p-adic valuation,
    - a simple extension QQ(gen) with the unique extension of the p-adic
      valuation, or for a quadratic that splits over Q_p the valuation of
      one chosen embedding into Q_p,
    - F_p(T) with the T-adic valuation (characteristic p).

    FieldElem pairs a raw domain element with its owning FieldSpec so that
    arithmetic, valuations and formatting never mix fields.
"""
import logging
from collections import namedtuple
from fractions import Fraction

from sympy import (CRootOf, GF, Poly, QQ, Rational, Symbol, fraction, isprime,
                   is_quad_residue, multiplicity, resultant, sqrt, sqrt_mod,
                   sympify, together)

from ultranev.errors import (FieldError, NotAChiPower, ParseError,
                             ZeroDenominator)
from ultranev.util import format_rational, p_adic_valuation, to_fraction

logger = logging.getLogger(__name__)

X = Symbol('x')
T = Symbol('T')

Extension = namedtuple('Extension', ['gen', 'minpoly', 'valuation', 'branch'],
                       defaults=(None,))
Extension.__doc__ = """
    Declared simple extension: generator name, monic minimal polynomial as
    Fraction coefficients (lowest degree first), the generator valuation and,
    for quadratics that split over Q_p, the chosen embedding (0 or 1).
"""

MAX_SPLIT_DIGITS = 4096


def _newton_slopes(points):
    """
        Slopes of the lower convex hull of (i, v) points, left to right.
    """
    hull = []
    for point in sorted(points):
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (point[1] - y1) - (y2 - y1) * (point[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(point)
    return [Fraction(y2 - y1) / (x2 - x1)
            for (x1, y1), (x2, y2) in zip(hull, hull[1:])]


def _is_padic_square(value, prime):
    """
        Whether a nonzero rational is a square in Q_p.
    """
    value = to_fraction(value)
    val = p_adic_valuation(value, prime)
    if val % 2:
        return False
    unit = value / Fraction(prime) ** val
    # unit = a/b with p dividing neither, a/b is a square iff a*b is
    product = unit.numerator * unit.denominator
    if prime == 2:
        return product % 8 == 1
    return is_quad_residue(product % prime, prime)


class FieldSpec:
    """
        A valued field K with characteristic, residue prime and optional
        simple extension.

        :param characteristic int: 0 or the prime p
        :param prime int: the valuation prime p
        :param extension Extension: optional simple extension (char 0 only)
        :param declared_irreducible bool: skip the irreducibility check of
            the minimal polynomial
    """

    def __init__(self, characteristic, prime, extension=None,
                 declared_irreducible=False):
        self._prefix = f'ultranev.algebra.{self.__class__.__name__}'
        if not isprime(prime):
            raise FieldError(f'{self._prefix}: {prime} is not a prime')
        if characteristic not in (0, prime):
            raise FieldError(f'{self._prefix}: characteristic must be 0 or '
                             f'{prime}, got {characteristic}')
        if characteristic and extension is not None:
            raise FieldError(f'{self._prefix}: extensions are only supported '
                             f'in characteristic 0')

        self._characteristic = characteristic
        self._prime = prime
        self._extension = extension
        self._gen_symbol = None
        self._gen_raw = None
        self._minpoly = None
        self._split = None

        if characteristic:
            self._domain = GF(prime).frac_field(T)
        elif extension is None:
            self._domain = QQ
        else:
            self._setup_extension(extension, declared_irreducible)

        logger.debug('%s: built %s', self._prefix, self.describe())

    def _setup_extension(self, extension, declared_irreducible):
        gen, coeffs, valuation, branch = extension
        coeffs = [to_fraction(c) for c in coeffs]
        if len(coeffs) < 3 or coeffs[-1] != 1:
            raise FieldError(f'{self._prefix}: minimal polynomial must be '
                             f'monic of degree at least 2')
        minpoly = Poly([Rational(c.numerator, c.denominator)
                        for c in reversed(coeffs)], X, domain=QQ)
        degree = len(coeffs) - 1
        if not declared_irreducible and not minpoly.is_irreducible:
            raise FieldError(f'{self._prefix}: {minpoly.as_expr()} is '
                             f'reducible over QQ')

        slopes = _newton_slopes([(i, p_adic_valuation(c, self._prime))
                                 for i, c in enumerate(coeffs) if c != 0])
        valuation = to_fraction(valuation)
        if -valuation not in slopes:
            raise FieldError(f'{self._prefix}: generator valuation {valuation}'
                             f' is not minus a Newton slope of '
                             f'{minpoly.as_expr()}')
        self._minpoly = minpoly
        if degree == 2:
            disc = coeffs[1] ** 2 - 4 * coeffs[0]
            if _is_padic_square(disc, self._prime):
                branch = self._choose_branch(coeffs, disc, valuation, branch)
            elif len(set(slopes)) > 1:
                raise FieldError(f'{self._prefix}: the p-adic valuation has '
                                 f'several extensions to this field')
            else:
                branch = None
            b = Rational(coeffs[1].numerator, coeffs[1].denominator)
            d = Rational(disc.numerator, disc.denominator)
            root = (-b + sqrt(d)) / 2
        else:
            if len(set(slopes)) > 1:
                raise FieldError(f'{self._prefix}: the p-adic valuation has '
                                 f'several extensions to this field')
            self._check_unique_extension(minpoly, coeffs, -valuation)
            branch = None
            root = CRootOf(minpoly.as_expr(), 0)

        self._domain = QQ.algebraic_field(root)
        self._gen_symbol = Symbol(gen)
        self._gen_raw = self._domain.from_sympy(root)
        self._extension = Extension(gen, tuple(coeffs), valuation, branch)

    def _choose_branch(self, coeffs, disc, valuation, branch):
        """
            The minimal polynomial splits over Q_p, so the field embeds into
            Q_p in two ways, one per root. The embedding sends the generator
            to sigma = (-b + p^e w) / 2 where disc = p^(2e) u and w is the
            square root of u in Z_p whose residue is the smaller residue
            root (branch 0) or its negative (branch 1). A declared generator
            valuation matching one root only decides the branch.
        """
        prime = self._prime
        if prime == 2:
            raise FieldError(f'{self._prefix}: {self._minpoly.as_expr()} '
                             f'splits over Q_2; split embeddings need an odd '
                             f'prime')
        half = p_adic_valuation(disc, prime) // 2
        unit = disc / Fraction(prime) ** (2 * half)
        residue = unit.numerator * pow(unit.denominator, -1, prime) % prime
        low = min(sqrt_mod(residue, prime, all_roots=True))
        self._split = {'b': coeffs[1], 'half': half, 'unit': unit,
                       'targets': (low, prime - low), 'roots': {}}
        matching = [candidate for candidate in (0, 1)
                    if self._root_shift_valuation(Fraction(0), candidate)
                    == valuation]
        if branch is not None:
            branch = int(branch)
            if branch not in matching:
                raise FieldError(f'{self._prefix}: branch {branch} sends the '
                                 f'generator to valuation '
                                 f'{self._root_shift_valuation(Fraction(0), branch)}'
                                 f', not {valuation}')
            return branch
        return matching[0]

    def _branch_root(self, branch, digits):
        """
            Square root of the discriminant unit modulo p^digits on the
            given branch.
        """
        key = (branch, digits)
        roots = self._split['roots']
        if key not in roots:
            prime = self._prime
            modulus = prime ** digits
            unit = self._split['unit']
            value = unit.numerator * pow(unit.denominator, -1, modulus) % modulus
            target = self._split['targets'][branch]
            roots[key] = next(root for root in sqrt_mod(value, modulus,
                                                        all_roots=True)
                              if root % prime == target)
        return roots[key]

    def _root_shift_valuation(self, shift, branch):
        """
            v(shift + sigma) for a rational shift under the embedding of
            the given branch.
        """
        prime = self._prime
        half = self._split['half']
        delta = shift - self._split['b'] / 2
        if not delta:
            return Fraction(half)
        delta_val = p_adic_valuation(delta, prime)
        if delta_val != half:
            return Fraction(min(delta_val, half))
        # shift + sigma = p^half (mu + w) / 2 with mu and w units
        mu = 2 * delta / Fraction(prime) ** half
        digits = 16
        while digits <= MAX_SPLIT_DIGITS:
            modulus = prime ** digits
            total = (mu.numerator * pow(mu.denominator, -1, modulus)
                     + self._branch_root(branch, digits)) % modulus
            if total:
                return Fraction(half + multiplicity(prime, total))
            digits *= 2
        raise FieldError(f'{self._prefix}: no valuation within '
                         f'{MAX_SPLIT_DIGITS} digits, is the minimal '
                         f'polynomial irreducible?')

    def _check_unique_extension(self, minpoly, coeffs, slope):
        """
            Degree >= 3: accepts totally ramified minimal polynomials and
            integral ones that stay irreducible modulo p.
        """
        degree = len(coeffs) - 1
        if slope.denominator == degree:
            return
        integral = all(c == 0 or p_adic_valuation(c, self._prime) >= 0
                       for c in coeffs)
        if slope == 0 and integral:
            residue = Poly([int(c.numerator * pow(c.denominator, -1,
                                                  self._prime))
                            for c in reversed(coeffs)], X, modulus=self._prime)
            if residue.degree() == degree and residue.is_irreducible:
                return
        raise FieldError(f'{self._prefix}: cannot certify that the '
                         f'{self._prime}-adic valuation extends uniquely to '
                         f'QQ[x]/({minpoly.as_expr()})')

    @property
    def characteristic(self):
        return self._characteristic

    @property
    def prime(self):
        return self._prime

    @property
    def extension(self):
        return self._extension

    @property
    def chi(self):
        """
            Characteristic exponent: the characteristic if positive, else 1.
        """
        return self._characteristic if self._characteristic else 1

    @property
    def degree(self):
        """
            Degree of the field over its prime field's rational base.
        """
        return 1 if self._extension is None else len(self._extension.minpoly) - 1

    @property
    def domain(self):
        return self._domain

    @property
    def gen_symbol(self):
        return self._gen_symbol

    @property
    def symbols(self):
        """
            Names the text grammar accepts besides x.
        """
        if self._characteristic:
            return {'T': T}
        if self._gen_symbol is not None:
            return {self._gen_symbol.name: self._gen_symbol}
        return {}

    @property
    def zero(self):
        return FieldElem(self, self._domain.zero)

    @property
    def one(self):
        return FieldElem(self, self._domain.one)

    def generator(self):
        """
            The declared generator (T in characteristic p).
        """
        if self._characteristic:
            return FieldElem(self, self._domain.from_sympy(T))
        if self._gen_raw is None:
            raise FieldError(f'{self._prefix}: field has no generator')
        return FieldElem(self, self._gen_raw)

    def describe(self):
        if self._characteristic:
            return f'F_{self._prime}(T), T-adic'
        if self._extension is None:
            return f'QQ, {self._prime}-adic'
        minpoly = self._minpoly.as_expr().subs(X, self._gen_symbol)
        return f'QQ({self._extension.gen}), {minpoly} = 0, {self._prime}-adic'

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self._characteristic == other._characteristic
                and self._prime == other._prime
                and self._extension == other._extension)

    def __hash__(self):
        return hash((self._characteristic, self._prime, self._extension))

    def __repr__(self):
        return f'FieldSpec({self.describe()})'

    # conversions

    def raw(self, value):
        """
            Converts ints, Fractions, strings, sympy expressions, FieldElems
            and raw domain elements into a raw element of this field.
        """
        if isinstance(value, FieldElem):
            if value.owner != self:
                raise FieldError(f'{self._prefix}: element of {value.owner!r} '
                                 f'used in {self!r}')
            return value.raw
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, (int, Fraction)):
            return self._from_rational(Fraction(value))
        if isinstance(value, str):
            from ultranev.algebra.parser import parse_expression
            return self.from_sympy(parse_expression(self, value))
        if self._domain.of_type(value):
            return self.normalize(value)
        return self.from_sympy(sympify(value))

    def normalize(self, raw):
        """
            Canonical representative of a raw element. In F_p(T) the
            reduced fraction is scaled so that its denominator is monic;
            other domains already store canonical elements.
        """
        if not self._characteristic or not raw:
            return raw
        lead = raw.denom.LC
        if lead == raw.denom.ring.domain.one:
            return raw
        return raw.raw_new(raw.numer.quo_ground(lead),
                           raw.denom.quo_ground(lead))

    def same(self, a, b):
        """
            Equality of two raw elements, independent of representatives.
        """
        return not (a - b)

    def element(self, value):
        return FieldElem(self, self.raw(value))

    def _from_rational(self, value):
        if not self._characteristic:
            return self._domain.convert(Rational(value.numerator,
                                                 value.denominator))
        if value.denominator % self._prime == 0:
            raise ZeroDenominator(f'{self._prefix}: {value} has a denominator '
                                  f'divisible by {self._prime}')
        residue = value.numerator * pow(value.denominator, -1, self._prime)
        return self._domain.convert(residue % self._prime)

    def from_sympy(self, expr):
        """
            Reads a sympy expression in the field's symbols.
        """
        num, den = fraction(together(sympify(expr)))
        if den == 0:
            raise ZeroDenominator(f'{self._prefix}: zero denominator in '
                                  f'{expr}')
        raw_num, raw_den = self._from_sympy_poly(num), self._from_sympy_poly(den)
        if not raw_den:
            raise ZeroDenominator(f'{self._prefix}: {den} vanishes in {self!r}')
        return self.normalize(raw_num / raw_den)

    def _from_sympy_poly(self, expr):
        domain = self._domain
        if expr.is_Rational:
            return self._from_rational(to_fraction(expr))
        if self._characteristic:
            gen, gen_raw = T, domain.from_sympy(T)
        elif self._gen_symbol is not None:
            gen, gen_raw = self._gen_symbol, self._gen_raw
        else:
            raise ParseError(f'{self._prefix}: {expr} is not a rational number')
        extra = expr.free_symbols - {gen}
        if extra:
            raise ParseError(f'{self._prefix}: unknown symbols '
                             f'{sorted(map(str, extra))} in {expr}')
        try:
            coeffs = Poly(expr, gen, domain=QQ).all_coeffs()
        except Exception as err:
            raise ParseError(f'{self._prefix}: cannot read {expr}: {err}')
        result = domain.zero
        for coeff in coeffs:
            result = result * gen_raw + self._from_rational(to_fraction(coeff))
        return result

    def to_sympy(self, raw):
        return self._domain.to_sympy(raw)

    def coords(self, raw):
        """
            Coordinates of an element on 1, gen, gen^2, ... (char 0 only).

            :return: list of Fractions, lowest power first
        """
        if self._characteristic:
            raise FieldError(f'{self._prefix}: coordinates are defined in '
                             f'characteristic 0 only')
        if self._extension is None:
            return [to_fraction(raw)]
        to_list = getattr(raw, 'to_list', None)
        rep = to_list() if to_list is not None else raw.rep
        coords = [to_fraction(c) for c in reversed(list(rep))]
        return coords or [Fraction(0)]

    def t_parts(self, raw):
        """
            Numerator and denominator of an F_p(T) element as sympy Polys
            in T over GF(p).
        """
        num, den = fraction(together(self._domain.to_sympy(raw)))
        return (Poly(num, T, modulus=self._prime),
                Poly(den, T, modulus=self._prime))

    def format(self, raw):
        """
            Exact string form: rationals as "a/b", extension elements as a
            polynomial in the generator, F_p(T) elements as sympy prints them.
        """
        if self._characteristic:
            return str(self._domain.to_sympy(raw))
        coords = self.coords(raw)
        if self._extension is None:
            return format_rational(coords[0])
        gen = self._extension.gen
        terms = []
        for power in range(len(coords) - 1, -1, -1):
            coeff = coords[power]
            if coeff == 0:
                continue
            monomial = '' if power == 0 else gen if power == 1 else f'{gen}^{power}'
            if not monomial:
                terms.append(format_rational(coeff))
            elif coeff == 1:
                terms.append(monomial)
            elif coeff == -1:
                terms.append(f'-{monomial}')
            else:
                terms.append(f'{format_rational(coeff)}*{monomial}')
        if not terms:
            return '0'
        return ' + '.join(terms).replace('+ -', '- ')

    # valuation and roots

    def valuation(self, raw):
        """
            Valuation of a raw element, None for zero (+infinity).
        """
        if not raw:
            return None
        if self._characteristic:
            num, den = self.t_parts(raw)
            return Fraction(min(m[0] for m in num.monoms())
                            - min(m[0] for m in den.monoms()))
        if self._extension is None:
            return Fraction(p_adic_valuation(to_fraction(raw), self._prime))
        coords = self.coords(raw)
        if self._split is not None:
            constant = coords[0]
            linear = coords[1] if len(coords) > 1 else Fraction(0)
            if not linear:
                return Fraction(p_adic_valuation(constant, self._prime))
            return (p_adic_valuation(linear, self._prime)
                    + self._root_shift_valuation(constant / linear,
                                                 self._extension.branch))
        element = Poly([Rational(c.numerator, c.denominator)
                        for c in reversed(coords)], X, domain=QQ)
        norm = to_fraction(resultant(self._minpoly.as_expr(),
                                     element.as_expr(), X))
        return (Fraction(multiplicity(self._prime, abs(norm.numerator))
                         - multiplicity(self._prime, norm.denominator))
                / self.degree)

    def chi_root(self, raw, times=1):
        """
            chi-th root of a raw element, applied the given number of times.
            The identity in characteristic 0.
        """
        if not self._characteristic:
            return raw
        for _ in range(times):
            raw = self._chi_root_once(raw)
        return raw

    def _chi_root_once(self, raw):
        prime = self._prime
        parts = []
        for part in self.t_parts(raw):
            terms = part.terms()
            if any(monom[0] % prime for monom, _ in terms):
                raise NotAChiPower(f'{self._prefix}: '
                                   f'{self._domain.to_sympy(raw)} is not a '
                                   f'{prime}-th power in F_{prime}(T)')
            # Frobenius is the identity on F_p
            parts.append(sum((int(coeff) * T ** (monom[0] // prime)
                              for monom, coeff in terms), 0))
        return self.from_sympy(sympify(parts[0]) / parts[1])

    def frobenius(self, raw, times=1):
        """
            raw ** (chi ** times).
        """
        return raw ** (self.chi ** times)

    def sqrt(self, raw):
        """
            A square root inside the field, or None when there is none.
        """
        if not raw:
            return raw
        if self._characteristic:
            return self._sqrt_char_p(raw)
        square = Poly([1, 0, -self._domain.to_sympy(raw)], X,
                      domain=self._domain)
        for factor, _ in square.factor_list()[1]:
            if factor.degree() == 1:
                lead, const = factor.rep.to_list()
                return -const / lead
        return None

    def _sqrt_char_p(self, raw):
        prime = self._prime
        if prime == 2:
            try:
                return self._chi_root_once(raw)
            except NotAChiPower:
                return None
        result = []
        for part in self.t_parts(raw):
            lead, factors = part.factor_list()
            if any(exp % 2 for _, exp in factors):
                return None
            roots = sqrt_mod(int(lead) % prime, prime)
            if roots is None:
                return None
            value = roots
            for factor, exp in factors:
                value = value * factor.as_expr() ** (exp // 2)
            result.append(value)
        return self.from_sympy(sympify(result[0]) / result[1])

    # serialization

    def to_json(self):
        data = {'char': self._characteristic, 'p': self._prime}
        if self._extension is not None:
            gen, coeffs, valuation, branch = self._extension
            minpoly = self._minpoly.as_expr()
            data['ext'] = {'gen': gen, 'minpoly': str(minpoly).replace('**', '^'),
                           'val': format_rational(valuation)}
            if branch is not None:
                data['ext']['branch'] = branch
        return data

    @classmethod
    def from_json(cls, data):
        """
            Builds a FieldSpec from {"char": 0, "p": 5, "ext": {"gen": "s",
            "minpoly": "x^2-3", "val": "0"}}; "ext" is optional, and so is
            its "branch", the embedding of a quadratic that splits over Q_p.
        """
        builder = FieldBuilder(int(data['p'])).with_characteristic(
            int(data.get('char', 0)))
        ext = data.get('ext')
        if ext:
            builder = builder.with_extension(ext['gen'], ext['minpoly'],
                                             ext.get('val', '0'),
                                             ext.get('irreducible', False),
                                             ext.get('branch'))
        return builder.get_result()


class FieldBuilder:
    """
        Builds FieldSpec objects step by step.

        :param prime int: the valuation prime
    """

    def __init__(self, prime):
        self._prime = prime
        self._characteristic = 0
        self._extension = None
        self._declared_irreducible = False

    def with_characteristic(self, characteristic):
        self._characteristic = characteristic
        return self

    def with_extension(self, gen, minpoly, valuation=0,
                       declared_irreducible=False, branch=None):
        """
            Declares a simple extension.

            :param gen str: generator name used in expressions
            :param minpoly: minimal polynomial in x, as text or as
                coefficients lowest degree first
            :param valuation: declared valuation of the generator
            :param branch int: embedding into Q_p, 0 or 1, when the minimal
                polynomial is a quadratic that splits over Q_p
        """
        if isinstance(minpoly, str):
            from ultranev.algebra.parser import parse_expression
            expr = parse_expression(None, minpoly)
            poly = Poly(expr, X, domain=QQ)
            minpoly = [to_fraction(c) for c in reversed(poly.all_coeffs())]
        self._extension = Extension(gen, tuple(to_fraction(c) for c in minpoly),
                                    to_fraction(valuation), branch)
        self._declared_irreducible = declared_irreducible
        return self

    def get_result(self):
        return FieldSpec(self._characteristic, self._prime, self._extension,
                         self._declared_irreducible)


class FieldElem:
    """
        Element of a FieldSpec.

        :param owner FieldSpec: the field
        :param raw: raw sympy domain element
    """

    __slots__ = ('_owner', '_raw')

    def __init__(self, owner, raw):
        self._owner = owner
        self._raw = owner.normalize(raw)

    @property
    def owner(self):
        return self._owner

    @property
    def raw(self):
        return self._raw

    @property
    def is_zero(self):
        return not self._raw

    def valuation(self):
        """
            Valuation, None for zero.
        """
        return self._owner.valuation(self._raw)

    def coords(self):
        return self._owner.coords(self._raw)

    def chi_root(self, times=1):
        return FieldElem(self._owner, self._owner.chi_root(self._raw, times))

    def frobenius(self, times=1):
        return FieldElem(self._owner, self._owner.frobenius(self._raw, times))

    def sqrt(self):
        root = self._owner.sqrt(self._raw)
        return None if root is None else FieldElem(self._owner, root)

    def to_sympy(self):
        return self._owner.to_sympy(self._raw)

    def _other(self, other):
        return self._owner.raw(other)

    def __add__(self, other):
        return FieldElem(self._owner, self._raw + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self._owner, self._raw - self._other(other))

    def __rsub__(self, other):
        return FieldElem(self._owner, self._other(other) - self._raw)

    def __mul__(self, other):
        return FieldElem(self._owner, self._raw * self._other(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        divisor = self._other(other)
        if not divisor:
            raise ZeroDenominator(f'ultranev.algebra.FieldElem: division of '
                                  f'{self} by zero')
        return FieldElem(self._owner, self._raw / divisor)

    def __rtruediv__(self, other):
        return FieldElem(self._owner, self._other(other)) / self

    def __neg__(self):
        return FieldElem(self._owner, -self._raw)

    def __pow__(self, exponent):
        if exponent < 0:
            return self._owner.one / FieldElem(self._owner,
                                               self._raw ** (-exponent))
        return FieldElem(self._owner, self._raw ** exponent)

    def __bool__(self):
        return bool(self._raw)

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return (self._owner == other._owner
                    and self._owner.same(self._raw, other._raw))
        try:
            return self._owner.same(self._raw, self._owner.raw(other))
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self._owner, self._owner.format(self._raw)))

    def __str__(self):
        return self._owner.format(self._raw)

    def __repr__(self):
        return f'FieldElem({self})'


def chi_root(value, times=1):
    """
        chi-th root homomorphism on field elements.
    """
    return value.chi_root(times)
