"""Maximal term, central index, significant indices and the hole exponent S(r)."""

from .diagnostics import (
    GrowthConditionReport,
    InequalityCheck,
    NormalityReport,
    asymptotic_constant,
    growth_condition_report,
    inequality_ladder,
    normality_diagnostics,
)
from .functionals import (
    GrowthProfile,
    band_count,
    band_counts,
    band_cutoff,
    band_indices,
    growth_profile,
    log_max_modulus,
    max_term,
    n1_count,
    n_x,
    s_value,
    verify_integral_relation,
)
from .table import LogTermTable, clear_table_cache, get_table

__all__ = [
    'GrowthConditionReport',
    'GrowthProfile',
    'InequalityCheck',
    'LogTermTable',
    'NormalityReport',
    'asymptotic_constant',
    'band_count',
    'band_counts',
    'band_cutoff',
    'band_indices',
    'clear_table_cache',
    'get_table',
    'growth_condition_report',
    'growth_profile',
    'inequality_ladder',
    'log_max_modulus',
    'max_term',
    'n1_count',
    'n_x',
    'normality_diagnostics',
    's_value',
    'verify_integral_relation',
]
