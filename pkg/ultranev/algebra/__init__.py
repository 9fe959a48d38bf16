from ultranev.algebra.field import *
from ultranev.algebra.padic import *
from ultranev.algebra.parser import *
from ultranev.algebra.poly import *
from ultranev.algebra.roots import *

__all__ = [
    'ApproxRoot',
    'DEGREE_OF_ZERO',
    'FieldBuilder',
    'FieldElem',
    'FieldSpec',
    'PadicApprox',
    'Poly',
    'P_ROLE',
    'Q_ROLE',
    'RatMap',
    'RootSet',
    'UnramifiedRoots',
    'apply_hints',
    'chi_root',
    'chi_root_poly',
    'contract_exponents',
    'critical_numerator',
    'distinct_zero_count',
    'expand_exponents',
    'frobenius_poly',
    'find_roots',
    'parse_element',
    'parse_expression',
    'parse_poly',
    'parse_ratmap',
    'poly_derivative',
    'poly_from_expr',
    'poly_gcd',
    'poly_multiplicity',
    'poly_resultant',
    'poly_squarefree_part',
    'ratmap_derivative',
    'ratmap_eval',
    'ratmap_frobenius',
    'ratmap_from_poly',
    'ratmap_normalize',
    'roots_exact',
    'roots_hensel',
    'separable_decomposition',
]
