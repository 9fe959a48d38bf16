"""
    Text literals for series and divisors.

    Series:   [a0, a1, a2, ...] @ order      (order omitted: exact)
    Divisor:  zero@<t> x<m>; pole@<t> x<m>; origin x<m>; cert@<t|inf>
"""
import re

from ultranev.algebra.parser import parse_element, parse_ratmap
from ultranev.errors import ParseError
from ultranev.series.mero import (Divisor, DivisorEntry, MeroRep,
                                  mero_from_ratmap)
from ultranev.series.truncseries import TruncSeries
from ultranev.util import parse_bound, to_fraction

_SERIES = re.compile(r'^\s*\[(?P<body>[^\]]*)\]\s*(?:@\s*(?P<order>\d+))?\s*$')

_DIVISOR_ITEM = re.compile(
    r'^\s*(?:(?P<kind>zero|pole)\s*@\s*(?P<t>-?\d+(?:/\d+)?)'
    r'|(?P<origin>origin)|cert\s*@\s*(?P<cert>inf|-?\d+(?:/\d+)?))'
    r'\s*(?:x\s*(?P<mult>\d+))?\s*$')


def is_series_literal(text):
    return text.lstrip().startswith('[')


def parse_series(field, text, tail_valuation=0):
    """
        Parses "[a0, a1, ...] @ order"; coefficients use the algebra
        grammar.

        :param field FieldSpec: coefficient field
        :param text str: the literal
        :param tail_valuation: valuation bound of the unknown coefficients
        :return: TruncSeries
    """
    match = _SERIES.match(text)
    if match is None:
        raise ParseError(f'ultranev.series.parse_series: expected '
                         f'"[a0, a1, ...] @ order", got {text!r}', position=0)
    body = match.group('body')
    offset = match.start('body')
    coeffs = []
    for piece in body.split(','):
        if not piece.strip():
            if body.strip():
                raise ParseError('ultranev.series.parse_series: empty '
                                 'coefficient', position=offset)
            continue
        try:
            coeffs.append(parse_element(field, piece))
        except ParseError as err:
            inner = err.position or 0
            raise ParseError(f'ultranev.series.parse_series: coefficient '
                             f'{piece.strip()!r} is invalid',
                             position=offset + inner)
        offset += len(piece) + 1
    order = match.group('order')
    if order is None:
        return TruncSeries(field, coeffs)
    return TruncSeries(field, coeffs, int(order), tail_valuation)


def parse_function(field, text, tail_valuation=0):
    """
        A series literal or a rational function expression as a MeroRep.
    """
    if is_series_literal(text):
        return MeroRep(parse_series(field, text, tail_valuation))
    return mero_from_ratmap(parse_ratmap(field, text))


def parse_divisor(text):
    """
        Parses a divisor literal; the empty string is the empty divisor.

        :param text str: items separated by ';'
        :return: Divisor
    """
    entries, origin, certified = [], 0, None
    position = 0
    for item in text.split(';'):
        if not item.strip():
            position += len(item) + 1
            continue
        match = _DIVISOR_ITEM.match(item)
        if match is None:
            raise ParseError(f'ultranev.series.parse_divisor: cannot read '
                             f'{item.strip()!r}', position=position)
        mult = int(match.group('mult') or 1)
        if match.group('cert') is not None:
            certified = parse_bound(match.group('cert'))
        elif match.group('origin'):
            origin += mult
        else:
            sign = 1 if match.group('kind') == 'zero' else -1
            entries.append(DivisorEntry(to_fraction(match.group('t')),
                                        sign * mult))
        position += len(item) + 1
    return Divisor(tuple(entries), certified, origin)
