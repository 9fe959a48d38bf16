from ultranev.series.truncseries import *
from ultranev.series.newton import *
from ultranev.series.mero import *
from ultranev.series.literal import *

__all__ = [
    'DEFAULT_ORDER', 'TruncSeries', 'series_from_poly', 'series_truncate',
    'series_add', 'series_scale', 'series_mul', 'series_pow',
    'series_reciprocal', 'series_compose_poly', 'series_shift',
    'series_derivative', 'series_chi_root', 'series_equal_upto',
    'series_to_json', 'series_arith',
    'CLOSED', 'OPEN', 'NewtonPolygon', 'lower_hull', 'newton_polygon',
    'check_certified', 'count_zeros_disk',
    'DivisorEntry', 'Divisor', 'divisor_sum', 'divisor_negate', 'MeroRep',
    'mero_from_ratmap', 'mero_from_series', 'mero_divisor', 'Ramification',
    'ramification_index', 'compose_ratmap', 'mero_sub_constant', 'mero_agree',
    'mero_mul', 'mero_pow',
    'is_series_literal', 'parse_series', 'parse_function', 'parse_divisor',
]
