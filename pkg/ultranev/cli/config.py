"""
    Run configuration: bundled defaults overridden by command-line flags.
"""
import json
import logging
import os
from dataclasses import dataclass
from fractions import Fraction

from ultranev.algebra.field import FieldSpec
from ultranev.errors import FieldError
from ultranev.util import to_fraction

logger = logging.getLogger(__name__)

FORMATS = ('json', 'csv', 'pretty')
MIN_ORDER = 4


def _package_path(*parts):
    return os.path.join(os.path.dirname(os.path.dirname(
        os.path.abspath(__file__))), *parts)


def load_defaults():
    """
        Reads config/default.json from the package directory.
    """
    with open(_package_path('config', 'default.json')) as file:
        return json.load(file)


def read_field(text):
    """
        FieldSpec from inline JSON or from the path of a JSON file.

        :param text str: '{"char": 0, "p": 5, ...}' or a file path
        :return: FieldSpec
    """
    text = text.strip()
    try:
        if text.startswith('{'):
            data = json.loads(text)
        else:
            with open(text) as file:
                data = json.load(file)
    except OSError:
        raise FieldError(f'ultranev.cli.read_field: cannot open {text!r}')
    except json.JSONDecodeError as err:
        raise FieldError(f'ultranev.cli.read_field: invalid JSON: {err}')
    return FieldSpec.from_json(data)


@dataclass(frozen=True)
class RunConfig:
    """
        Settings shared by all commands.

        :param field FieldSpec: coefficient field
        :param truncation_order int: order of truncated series, at least 4
        :param precision_digits int: Hensel digits, at least 1
        :param output str: json, csv or pretty
    """
    field: FieldSpec
    truncation_order: int = 64
    precision_digits: int = 24
    output: str = 'json'
    t_start: Fraction = Fraction(0)
    tail_valuation: Fraction = Fraction(0)

    def __post_init__(self):
        prefix = f'ultranev.cli.{self.__class__.__name__}'
        if self.truncation_order < MIN_ORDER:
            raise ValueError(f'{prefix}: truncation order must be at least '
                             f'{MIN_ORDER}, got {self.truncation_order}')
        if self.precision_digits < 1:
            raise ValueError(f'{prefix}: precision must be positive, got '
                             f'{self.precision_digits}')
        if self.output not in FORMATS:
            raise ValueError(f'{prefix}: output must be one of {FORMATS}, '
                             f'got {self.output!r}')

    @classmethod
    def from_dict(cls, data):
        return cls(FieldSpec.from_json(data['field']),
                   int(data.get('truncation_order', 64)),
                   int(data.get('precision_digits', 24)),
                   data.get('output', 'json'),
                   to_fraction(data.get('t_start', 0)),
                   to_fraction(data.get('tail_valuation', 0)))

    @classmethod
    def from_args(cls, args, field=None):
        """
            Defaults from the bundled file, then every flag that was given.

            :param args Namespace: parsed command line
            :param field FieldSpec: overrides --field and --p
            :return: RunConfig
        """
        data = load_defaults()
        if getattr(args, 'p', None) is not None:
            data['field'] = dict(data['field'], p=args.p)
        if getattr(args, 'char', None) is not None:
            data['field'] = dict(data['field'], char=args.char)
        for key, flag in (('truncation_order', 'order'),
                          ('precision_digits', 'precision'),
                          ('output', 'format'),
                          ('t_start', 't_start'),
                          ('tail_valuation', 'tail')):
            value = getattr(args, flag, None)
            if value is not None:
                data[key] = value
        config = cls.from_dict(data)
        if field is None and getattr(args, 'field', None):
            field = read_field(args.field)
        if field is not None:
            config = cls(field, config.truncation_order,
                         config.precision_digits, config.output,
                         config.t_start, config.tail_valuation)
        logger.debug('ultranev.cli.RunConfig: %s, order %d, precision %d',
                     config.field.describe(), config.truncation_order,
                     config.precision_digits)
        return config
