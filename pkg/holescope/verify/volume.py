"""Volume of C_N = {r in [0, t]^N : prod r_j <= s}."""

import math

import numpy as np
from pydantic import BaseModel
from scipy.special import gammaincc, gammaln

from holescope.exceptions import ParameterInvalidError

MC_CHUNK = 1_000_000


class VolumeReport(BaseModel):
    n: int
    t: float
    s: float
    exact: float
    bound: float
    # log(t^N / s) >= N
    applicable: bool
    holds: bool | None


def _validate(n: int, t: float, s: float) -> None:
    if n < 1:
        raise ParameterInvalidError('N', n, 'Must be positive.')
    if not t > 0:
        raise ParameterInvalidError('t', t, 'Must be positive.')
    if not s > 0:
        raise ParameterInvalidError('s', s, 'Must be positive.')


def volume_cn(n: int, t: float, s: float) -> VolumeReport:
    """Exact volume and the bound s log^N(t^N / s) / (N - 1)!.

    For s < t^N, with L = log(t^N / s), the volume is
    s sum_{k < N} L^k / k! = t^N Q(N, L), Q the regularized upper incomplete gamma.
    """
    _validate(n, t, s)
    log_box = n * math.log(t)
    log_ratio = log_box - math.log(s)
    if log_ratio <= 0:
        exact = math.exp(log_box)
    else:
        exact = math.exp(log_box) * float(gammaincc(n, log_ratio))
    if log_ratio > 0:
        bound = math.exp(math.log(s) + n * math.log(log_ratio) - float(gammaln(n)))
    else:
        bound = 0.0
    applicable = log_ratio >= n
    return VolumeReport(
        n=n,
        t=float(t),
        s=float(s),
        exact=exact,
        bound=bound,
        applicable=applicable,
        holds=(exact <= bound * (1 + 1e-12)) if applicable else None,
    )


def volume_cn_monte_carlo(
    n: int, t: float, s: float, n_samples: int, seed: int
) -> tuple[float, float]:
    """(estimate, standard error) of the volume by uniform sampling of the box."""
    _validate(n, t, s)
    rng = np.random.Generator(np.random.Philox(seed))
    log_s = math.log(s)
    hits = 0
    remaining = n_samples
    while remaining:
        size = min(MC_CHUNK, remaining)
        points = rng.random((size, n)) * t
        with np.errstate(divide='ignore'):
            hits += int(np.count_nonzero(np.log(points).sum(axis=1) <= log_s))
        remaining -= size
    box = t**n
    p = hits / n_samples
    return box * p, box * math.sqrt(p * (1 - p) / n_samples)
