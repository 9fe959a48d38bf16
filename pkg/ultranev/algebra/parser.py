"""
    Text grammar for field elements, polynomials and rational functions:
    integers, rationals "a/b", the variable x, the field's generator (or T
    in characteristic p), parentheses and the operators + - * / ^.

    The text is tokenized first so that errors carry a position, then handed
    to sympy's parser.
"""
import logging
import re
from collections import namedtuple

from sympy import Poly as SymPoly
from sympy import fraction, together
from sympy.parsing.sympy_parser import (convert_xor, implicit_multiplication,
                                        parse_expr, standard_transformations)

from ultranev.algebra.field import X
from ultranev.algebra.poly import P_ROLE, Poly, ratmap_normalize
from ultranev.errors import ParseError, ZeroDenominator

logger = logging.getLogger(__name__)

Token = namedtuple('Token', ['kind', 'text', 'position'])

_TOKEN = re.compile(r'\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_]\w*)|'
                    r'(?P<op>\*\*|[-+*/^()]))')

_TRANSFORMATIONS = standard_transformations + (convert_xor,
                                               implicit_multiplication)


def tokenize(text, names):
    """
        Splits text into tokens, rejecting unknown names and characters.

        :param text str: the expression
        :param names set: accepted identifiers
        :return: list of Token
    """
    tokens, position = [], 0
    depth = 0
    while position < len(text):
        if text[position:].strip() == '':
            break
        match = _TOKEN.match(text, position)
        if match is None:
            offset = position + len(text[position:]) - len(text[position:].lstrip())
            raise ParseError(f'ultranev.algebra.parser: unexpected character '
                             f'{text[offset]!r}', position=offset)
        kind = match.lastgroup
        value = match.group(kind)
        start = match.start(kind)
        if kind == 'name' and value not in names:
            raise ParseError(f'ultranev.algebra.parser: unknown name '
                             f'{value!r}', position=start)
        if value == '(':
            depth += 1
        elif value == ')':
            depth -= 1
            if depth < 0:
                raise ParseError('ultranev.algebra.parser: unbalanced ")"',
                                 position=start)
        tokens.append(Token(kind, value, start))
        position = match.end()
    if not tokens:
        raise ParseError('ultranev.algebra.parser: empty expression',
                         position=0)
    if depth:
        raise ParseError('ultranev.algebra.parser: unbalanced "("',
                         position=len(text))
    last = tokens[-1]
    if last.kind == 'op' and last.text not in ')':
        raise ParseError(f'ultranev.algebra.parser: expression ends with '
                         f'{last.text!r}', position=last.position)
    return tokens


def parse_expression(field, text):
    """
        Parses text into a sympy expression over x and the field's symbols.

        :param field FieldSpec: declares the accepted symbols, None for x only
        :param text str: the expression
        :return: sympy expression
    """
    local = {'x': X}
    if field is not None:
        local.update(field.symbols)
    tokenize(text, set(local))
    try:
        return parse_expr(text, local_dict=local,
                          transformations=_TRANSFORMATIONS, evaluate=True)
    except (SyntaxError, TypeError, ValueError) as err:
        raise ParseError(f'ultranev.algebra.parser: cannot parse {text!r}: '
                         f'{err}', position=0)
    except ZeroDivisionError:
        raise ZeroDenominator(f'ultranev.algebra.parser: division by zero in '
                              f'{text!r}')


def poly_from_expr(field, expr):
    """
        Converts a sympy expression polynomial in x into a Poly over field.
    """
    try:
        coeffs = SymPoly(expr, X).all_coeffs()
    except Exception as err:
        raise ParseError(f'ultranev.algebra.parser: {expr} is not a '
                         f'polynomial in x: {err}', position=0)
    return Poly(field, [field.from_sympy(c) for c in reversed(coeffs)])


def parse_element(field, text):
    """
        Parses a field element such as "1/2*s - 1/3".
    """
    expr = parse_expression(field, text)
    if X in expr.free_symbols:
        raise ParseError(f'ultranev.algebra.parser: {text!r} depends on x',
                         position=text.find('x'))
    return field.element(field.from_sympy(expr))


def parse_poly(field, text):
    """
        Parses a polynomial in x.
    """
    num, den = fraction(together(parse_expression(field, text)))
    if X in den.free_symbols:
        raise ParseError(f'ultranev.algebra.parser: {text!r} is not a '
                         f'polynomial', position=0)
    return poly_from_expr(field, num) * (1 / field.element(field.from_sympy(den)))


def parse_ratmap(field, text, role=P_ROLE):
    """
        Parses a rational function in x and normalizes it for the given
        role.
    """
    num, den = fraction(together(parse_expression(field, text)))
    logger.debug('ultranev.algebra.parser: %r -> (%s)/(%s)', text, num, den)
    return ratmap_normalize(poly_from_expr(field, num),
                            poly_from_expr(field, den), role)
