from ultranev.nevanlinna.bundle import *
from ultranev.nevanlinna.checks import *

__all__ = [
    'NevBundle', 'counting_function', 'nev_from_divisor', 'nev_from_mero',
    'nev_evaluate',
    'HOLDS_EVENTUALLY', 'VIOLATED_EVENTUALLY', 'INCONCLUSIVE_WITHIN_RADIUS',
    'BOUNDED_TYPE', 'UNBOUNDED_TYPE', 'INCONCLUSIVE_AT_ORDER',
    'TheoremNReport', 'GrowthComparison', 'LambdaBoundReport',
    'FactorizationCheck', 'check_theorem_N', 'check_degree_identity',
    'check_pq_relation', 'check_lambda_bound', 'classify_boundedness',
    'classify_divisor_boundedness', 'check_factorization_identity',
]
