"""Log-domain coefficient profiles a_n for random series sum phi_n a_n z^n."""

from .base import CoefficientModel, Family, LogTerm, ValidationReport
from .impl.table import TableModel, load_table, save_table
from .models import (
    FamilySpec,
    check_entirety,
    check_log_concavity,
    log_term,
    make_family,
)

__all__ = [
    'CoefficientModel',
    'Family',
    'FamilySpec',
    'LogTerm',
    'TableModel',
    'ValidationReport',
    'check_entirety',
    'check_log_concavity',
    'load_table',
    'log_term',
    'make_family',
    'save_table',
]
