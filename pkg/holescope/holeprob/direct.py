import math
from functools import partial

import numpy as np
from scipy.stats import beta

from holescope.coeffs import CoefficientModel
from holescope.config import CI_LEVEL, DEFAULT_LOG_EPS
from holescope.exceptions import ParameterInvalidError
from holescope.holeprob.results import EstimateResult, Method
from holescope.holeprob.sampler import run_streams
from holescope.sampling import choose_truncation
from holescope.utils.logger import holescope_logger as logger
from holescope.zerocount import classify_batch

MIN_DIRECT_SAMPLES = 100


def clopper_pearson(k: int, n: int, level: float = CI_LEVEL) -> tuple[float, float]:
    """Exact binomial interval for k successes in n trials."""
    alpha = 1.0 - level
    low = 0.0 if k == 0 else float(beta.ppf(alpha / 2, k, n - k + 1))
    high = 1.0 if k == n else float(beta.ppf(1 - alpha / 2, k + 1, n - k))
    return low, high


def _log(x: float) -> float:
    return math.log(x) if x > 0 else -math.inf


def binomial_estimate(
    method: Method,
    r: float,
    n_samples: int,
    n_hole: int,
    n_uncertain: int,
    level: float = CI_LEVEL,
) -> EstimateResult:
    """Point estimate and outer interval; uncertain samples count as no-hole at
    the low end and as hole at the high end."""
    low, _ = clopper_pearson(n_hole, n_samples, level)
    _, high = clopper_pearson(n_hole + n_uncertain, n_samples, level)
    reliable = n_hole > 0
    if reliable:
        log_p = math.log(n_hole / n_samples)
    else:
        log_p = math.log(high / 2)
        logger.info(f'No certified holes in {n_samples} samples at r={r!r}; reporting interval midpoint')
    return EstimateResult(
        method=method,
        r=float(r),
        log_p=min(log_p, 0.0),
        log_ci_low=_log(low),
        log_ci_high=min(_log(high), 0.0),
        n_samples=n_samples,
        n_hole=n_hole,
        n_uncertain=n_uncertain,
        reliable=reliable,
    )


def estimate_direct(
    model: CoefficientModel,
    r: float,
    n_samples: int,
    seed: int,
    log_eps: float = DEFAULT_LOG_EPS,
    workers: int | None = None,
) -> EstimateResult:
    """Plain Monte Carlo frequency of certified holes with a Clopper-Pearson interval."""
    if n_samples < MIN_DIRECT_SAMPLES:
        raise ParameterInvalidError(
            'n_samples', n_samples, f'Direct estimation needs at least {MIN_DIRECT_SAMPLES}.'
        )
    n_trunc = choose_truncation(model, r, log_eps)
    logger.info(f'direct: {model.describe()} r={r!r} n_trunc={n_trunc} samples={n_samples}')
    outcome = run_streams(
        partial(_classify, model, r), n_samples, seed, n_trunc, workers=workers
    )
    result = binomial_estimate(
        Method.DIRECT,
        r,
        n_samples,
        int(np.count_nonzero(outcome.hole)),
        int(np.count_nonzero(outcome.uncertain)),
    )
    result.diagnostics = {'n_trunc': n_trunc, 'seed': seed, 'log_eps': log_eps}
    return result


def _classify(model: CoefficientModel, r: float, draws: np.ndarray):
    return classify_batch(model, draws, r)
