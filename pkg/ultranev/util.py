"""
    Provides utility functions shared by every subpackage: the exact
    rational string form used in all reports and domain bounds.
"""
from fractions import Fraction

from sympy import multiplicity

from ultranev.errors import ParseError

INFINITY = 'inf'


def to_fraction(value):
    """
        Converts ints, Fractions, sympy Rationals and "a/b" strings to a
        Fraction.

        :param value: the value to convert
        :return: the exact Fraction
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    # sympy Rational and gmpy mpq both expose numerator/denominator
    try:
        return Fraction(int(value.numerator), int(value.denominator))
    except (AttributeError, TypeError):
        pass
    try:
        return Fraction(int(value.p), int(value.q))
    except AttributeError:
        raise TypeError(f'ultranev.util: cannot read {value!r} as a rational')


def parse_rational(text):
    """
        Reads an exact rational written as "a", "a/b" or "-a/b".

        :param text str: the rational literal
        :return: Fraction with canonical sign and reduced form
    """
    stripped = text.strip()
    try:
        if '/' in stripped:
            num, den = stripped.split('/')
            return Fraction(int(num), int(den))
        return Fraction(int(stripped))
    except (ValueError, ZeroDivisionError):
        position = 0
        for position, char in enumerate(stripped):
            if not (char.isdigit() or char in '-+/ '):
                break
        raise ParseError(f'ultranev.util: invalid rational literal {text!r}',
                         position=position)


def format_rational(value):
    """
        Writes a Fraction as "a/b" ("a" when the denominator is 1). Never
        produces decimals.

        :param value Fraction: value to format
        :return: the string form
    """
    value = to_fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f'{value.numerator}/{value.denominator}'


def format_bound(value):
    """
        Formats a domain bound where None stands for +infinity.
    """
    return INFINITY if value is None else format_rational(value)


def parse_bound(text):
    """
        Reads a domain bound written as a rational or "inf".
    """
    if text is None:
        return None
    if isinstance(text, str) and text.strip().lower() in (INFINITY, '+inf'):
        return None
    return to_fraction(text)


def min_bound(*bounds):
    """
        Minimum of domain bounds where None is +infinity.

        :return: the smallest finite bound, or None if all are infinite
    """
    finite = [bound for bound in bounds if bound is not None]
    return min(finite) if finite else None


def p_adic_valuation(value, prime):
    """
        Exact p-adic valuation of a nonzero rational.

        :param value Fraction: nonzero rational
        :param prime int: the prime p
        :return: integer valuation
    """
    value = to_fraction(value)
    if value == 0:
        raise ValueError('ultranev.util: valuation of zero is +infinity')
    return (multiplicity(prime, abs(value.numerator))
            - multiplicity(prime, value.denominator))
