"""Log-domain helpers shared by the growth, sampling and estimator code."""

import math

import numpy as np
from scipy.special import logsumexp

__all__ = ['log1mexp', 'log1mexp_of_log', 'log_fsum', 'logsumexp']


def log1mexp(x):
    """log(1 - exp(-x)) for x > 0, accurate on both ends."""
    x = np.asarray(x, dtype=float)
    with np.errstate(divide='ignore'):
        return np.where(
            x > math.log(2.0),
            np.log1p(-np.exp(-x)),
            np.log(-np.expm1(-x)),
        )


def log1mexp_of_log(log_x):
    """log(1 - exp(-x)) given log x, usable when x itself underflows."""
    log_x = np.asarray(log_x, dtype=float)
    # For tiny x, 1 - e^{-x} = x(1 - x/2 + ...).
    small = log_x < -20.0
    with np.errstate(over='ignore', under='ignore'):
        x = np.exp(np.where(small, 0.0, log_x))
        tiny = np.exp(np.where(small, log_x, -np.inf))
    return np.where(small, log_x - tiny / 2.0, log1mexp(np.where(small, 1.0, x)))


def log_fsum(values) -> float:
    """Compensated sum of finite values."""
    return math.fsum(float(v) for v in np.asarray(values, dtype=float).ravel())
