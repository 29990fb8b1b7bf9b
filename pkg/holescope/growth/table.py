"""Tabulated log-terms h(n) = log a_n + n log r for one (model, radius) pair.

Every growth functional is a scan of this table. It is built once per
radius, extended by doubling until the terms have fallen far enough below
the maximal term that every enumerated band is complete, and memoized.
"""

import math
import threading
from dataclasses import dataclass

import numpy as np
from cachetools import LRUCache

from holescope.coeffs import CoefficientModel
from holescope.config import BAND_DEPTH, LOG_TOL, MAX_TABLE_LENGTH
from holescope.exceptions import ParameterInvalidError, SupportExhaustedError
from holescope.utils.logger import holescope_logger as logger

INITIAL_EXTENT = 32
DEFAULT_MAX_CACHE_SIZE = 256


@dataclass(frozen=True, eq=False)
class LogTermTable:
    r: float
    log_r: float
    depth: float
    h: np.ndarray
    # Per-index tolerance for equality tests on h.
    tol: np.ndarray
    # log of the term ratio at the last tabulated index; < 0, or -inf for polynomials.
    tail_log_ratio: float

    @property
    def last_index(self) -> int:
        return self.h.size - 1

    @property
    def log_mu(self) -> float:
        return float(self.h.max())

    @property
    def nu(self) -> int:
        """Largest index attaining the maximal term."""
        at_max = np.flatnonzero(self.h >= self.log_mu - self.tol)
        return int(at_max[-1])

    @property
    def n1(self) -> int:
        significant = np.flatnonzero(self.h >= -self.tol)
        return int(significant[-1]) + 1

    def count_at_least(self, threshold: float) -> int:
        """#{n : h(n) >= threshold}, with the equality tolerance."""
        return int(np.count_nonzero(self.h >= threshold - self.tol))

    def floor(self) -> float:
        """Level every term past the table is guaranteed to lie below."""
        return -self.depth * max(1.0, self.log_mu) - self.log_mu


_table_cache: LRUCache = LRUCache(maxsize=DEFAULT_MAX_CACHE_SIZE)
_table_lock = threading.Lock()


def _evaluate(model: CoefficientModel, log_r: float, extent: int) -> tuple[np.ndarray, np.ndarray]:
    ns = np.arange(extent + 1)
    log_a = model.log_coeffs(ns)
    linear = ns * log_r
    h = log_a + linear
    finite = np.isfinite(log_a)
    tol = np.where(finite, LOG_TOL * (1.0 + np.abs(np.where(finite, log_a, 0.0)) + np.abs(linear)), 0.0)
    return h, tol


def build_table(model: CoefficientModel, r: float, depth: float = BAND_DEPTH) -> LogTermTable:
    """Tabulate h on 0..E with E the first index past the peak where
    h(E) < -depth * max(1, log mu) - log mu.

    Raises:
        SupportExhaustedError: h is still increasing past the support hint.
    """
    if not (r > 0 and math.isfinite(r)):
        raise ParameterInvalidError('r', r, 'Radius must be a positive finite real.')
    log_r = math.log(r)
    extent = INITIAL_EXTENT
    while True:
        h, tol = _evaluate(model, log_r, extent)
        peak = int(np.argmax(h))
        tail_log_ratio = float(model.log_ratio(np.array([extent]))[0]) + log_r
        bracketed = peak < extent and tail_log_ratio < 0
        if not bracketed and extent > model.n_support_hint:
            raise SupportExhaustedError(r, model.n_support_hint)
        if bracketed:
            log_mu = float(h[peak])
            if h[-1] < -depth * max(1.0, log_mu) - log_mu:
                break
        if extent >= MAX_TABLE_LENGTH:
            raise SupportExhaustedError(r, extent)
        extent = min(2 * extent, MAX_TABLE_LENGTH)

    logger.debug(
        f'Log-term table for {model.describe()} at r={r!r}: extent={extent}, '
        f'peak={peak}, log_mu={h[peak]:.6g}'
    )
    h.setflags(write=False)
    tol.setflags(write=False)
    return LogTermTable(
        r=float(r), log_r=log_r, depth=depth, h=h, tol=tol, tail_log_ratio=tail_log_ratio
    )


def get_table(model: CoefficientModel, r: float, depth: float = BAND_DEPTH) -> LogTermTable:
    """Memoized build_table."""
    key = (model.key, float(r), float(depth))
    with _table_lock:
        table = _table_cache.get(key)
    if table is None:
        table = build_table(model, r, depth)
        with _table_lock:
            _table_cache[key] = table
    return table


def clear_table_cache() -> None:
    with _table_lock:
        _table_cache.clear()
