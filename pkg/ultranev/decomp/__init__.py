from ultranev.decomp.condition import *
from ultranev.decomp.factorization import *
from ultranev.decomp.verdict import *

__all__ = [
    'NO', 'YES', 'YES_AT_PRECISION',
    'ClauseResult', 'ConditionMReport', 'DCheck', 'check_condition_M',
    'padic_eval', 'padic_value',
    'LocalFactorization', 'local_factorizations', 'multiset_size', 'theta',
    'ANALYTIC_UNBOUNDED_DISK', 'COR216', 'DEGREE_PATTERN', 'ENTIRE_ON_K',
    'INCONCLUSIVE', 'MERO_ON_K', 'MERO_UNBOUNDED_DISK', 'RULED_OUT',
    'SETTINGS', 'THM214', 'LambdaClass', 'Verdict', 'describe',
    'lambda_class', 'monotone', 'trace_conclusion', 'verdict',
    'verdict_all', 'verdict_cor216', 'verdict_degree_pattern',
    'verdict_entire', 'verdict_mero', 'verdict_thm214',
]
