import math

import numpy as np

from holescope.coeffs import CoefficientModel
from holescope.config import BAND_DEPTH
from holescope.exceptions import ParameterInvalidError, SupportExhaustedError
from holescope.growth import LogTermTable, get_table


def _table_for(model: CoefficientModel, r: float, log_eps: float) -> LogTermTable:
    table = get_table(model, r)
    # The table must reach below the target before the geometric bound takes over.
    needed = (-log_eps) / max(1.0, table.log_mu) + 2.0
    if needed > table.depth:
        table = get_table(model, r, depth=max(BAND_DEPTH, math.ceil(needed)))
    return table


def _log_tail_sums(table: LogTermTable) -> np.ndarray:
    """T[N] = log sum_{n > N} a_n^2 r^{2n}, for N = 0 .. last_index."""
    two_h = 2.0 * table.h
    # Geometric domination past the table: ratio e^{2q} per step.
    q = table.tail_log_ratio
    if math.isfinite(q) and math.isfinite(two_h[-1]):
        beyond = two_h[-1] + 2.0 * q - math.log(-math.expm1(2.0 * q))
    else:
        beyond = -math.inf
    shifted = np.append(two_h[1:], beyond)
    return np.logaddexp.accumulate(shifted[::-1])[::-1]


def truncation_log_tail(model: CoefficientModel, r: float, n_trunc: int) -> float:
    """1/2 log sum_{n > n_trunc} a_n^2 r^{2n} - log mu(r): the relative tail rms."""
    table = get_table(model, r)
    depth = table.depth
    while n_trunc > table.last_index:
        if model.is_polynomial:
            return -math.inf
        depth *= 2
        table = get_table(model, r, depth=depth)
    return 0.5 * float(_log_tail_sums(table)[n_trunc]) - table.log_mu


def choose_truncation(model: CoefficientModel, r: float, log_eps: float) -> int:
    """Smallest N with 1/2 log sum_{n>N} a_n^2 r^{2n} <= log mu(r) + log_eps."""
    if not log_eps < 0:
        raise ParameterInvalidError('log_eps', log_eps, 'Must be negative.')
    table = _table_for(model, r, log_eps)
    tails = _log_tail_sums(table)
    ok = np.flatnonzero(0.5 * tails <= table.log_mu + log_eps)
    if ok.size == 0:
        raise SupportExhaustedError(r, table.last_index)
    return int(ok[0])
