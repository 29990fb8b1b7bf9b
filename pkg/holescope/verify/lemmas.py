import math

import numpy as np
from pydantic import BaseModel

from holescope.coeffs import CoefficientModel
from holescope.config import DEFAULT_LOG_EPS
from holescope.exceptions import ParameterInvalidError
from holescope.growth import get_table, log_max_modulus, n1_count, s_value
from holescope.sampling import choose_truncation, draw_batch, evaluate_on_grid, scale_factors
from holescope.utils.parallel import map_chunks

S_SHIFT_MIN_N1 = 32
S_SHIFT_CONSTANT = 8.0


class SShiftReport(BaseModel):
    r: float
    n1: int
    applicable: bool
    delta: float | None = None
    s_r: float | None = None
    s_shifted: float | None = None
    # S(r) - S((1 - delta) r)
    drop: float | None = None
    bound: float | None = None
    holds: bool | None = None
    # drop / S(r)
    relative_drop: float | None = None


class DeviationReport(BaseModel):
    r: float
    n_samples: int
    sigma: float
    log_mu: float
    log_max_modulus: float
    s: float
    # Frequency of max |f| >= M(r)^{1 + sigma} on |z| = r; recorded only.
    freq_large: float
    # Frequency of max |f| <= 1 on |z| = r.
    freq_small: float
    small_bound: float
    small_margin: float
    holds: bool


def s_shift_check(model: CoefficientModel, r: float) -> SShiftReport:
    """S(r) - S((1 - delta) r) <= 8 N_1^{9/5} with delta = N_1^{-1/5}; needs N_1 >= 32."""
    n1, _ = n1_count(model, r)
    if n1 < S_SHIFT_MIN_N1:
        return SShiftReport(r=float(r), n1=n1, applicable=False)
    delta = n1**-0.2
    s_r = s_value(model, r)
    s_shifted = s_value(model, (1.0 - delta) * r)
    drop = s_r - s_shifted
    bound = S_SHIFT_CONSTANT * n1**1.8
    return SShiftReport(
        r=float(r),
        n1=n1,
        applicable=True,
        delta=delta,
        s_r=s_r,
        s_shifted=s_shifted,
        drop=drop,
        bound=bound,
        holds=drop <= bound,
        relative_drop=drop / s_r if s_r > 0 else None,
    )


def dev_bounds_spotcheck(
    model: CoefficientModel,
    r: float,
    n_samples: int,
    seed: int,
    sigma: float = 0.5,
    log_eps: float = DEFAULT_LOG_EPS,
    workers: int | None = None,
) -> DeviationReport:
    """Empirical frequencies of a very large and a very small maximum modulus.

    The small-maximum event is counted on the sampled grid maximum, which can
    only undercount the true maximum, so its frequency errs high against
    the bound exp(-S(r)) + 3 binomial standard errors.
    """
    if n_samples < 1:
        raise ParameterInvalidError('n_samples', n_samples, 'Must be positive.')
    if sigma <= 0:
        raise ParameterInvalidError('sigma', sigma, 'Must be positive.')
    n_trunc = choose_truncation(model, r, log_eps)
    factors = scale_factors(model, r, n_trunc)
    log_mu = get_table(model, r).log_mu
    log_m = log_max_modulus(model, r)
    grid = max(64, 1 << (8 * (n_trunc + 1) - 1).bit_length())

    def work(streams: range) -> np.ndarray:
        coeffs = draw_batch(seed, streams, n_trunc + 1) * factors
        with np.errstate(divide='ignore'):
            return np.log(np.abs(evaluate_on_grid(coeffs, grid)).max(axis=1)) + log_mu

    log_max = np.concatenate(map_chunks(work, n_samples, workers=workers))
    freq_large = float(np.mean(log_max >= (1.0 + sigma) * log_m))
    freq_small = float(np.mean(log_max <= 0.0))

    s = s_value(model, r)
    p0 = math.exp(-s)
    bound = p0 + 3.0 * math.sqrt(p0 * (1.0 - p0) / n_samples)
    return DeviationReport(
        r=float(r),
        n_samples=n_samples,
        sigma=sigma,
        log_mu=log_mu,
        log_max_modulus=log_m,
        s=s,
        freq_large=freq_large,
        freq_small=freq_small,
        small_bound=bound,
        small_margin=bound - freq_small,
        holds=freq_small <= bound,
    )
