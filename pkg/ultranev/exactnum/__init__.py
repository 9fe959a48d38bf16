from ultranev.exactnum.plfun import *

__all__ = [
    'BoundedDifference',
    'PLFun',
    'plf_bounded_difference',
    'plf_breakpoints',
    'plf_eval',
    'plf_eventual_slope',
    'plf_from_json',
    'plf_lincomb',
    'plf_line',
    'plf_max',
    'plf_restrict',
    'plf_sample',
    'plf_to_json',
    'plf_zero',
]
