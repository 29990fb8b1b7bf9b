import math
from typing import Iterator, Sequence

import pandas as pd

from holescope.coeffs import CoefficientModel
from holescope.exceptions import DegenerateProfileError, EstimatorError, ParameterInvalidError
from holescope.growth import growth_profile
from holescope.holeprob.certificate import certificate_log_prob
from holescope.holeprob.direct import estimate_direct
from holescope.holeprob.importance import default_proposal, estimate_importance
from holescope.holeprob.results import EstimateResult, EstimatorSettings, Method
from holescope.sampling import choose_truncation
from holescope.utils.logger import holescope_logger as logger

COMPARE_COLUMNS = [
    'r',
    's',
    'neg_log_p',
    'neg_log_ci_low',
    'neg_log_ci_high',
    'neg_certificate',
    'n1_log_n1',
    'ratio',
    'ess',
]


def run_estimate(model: CoefficientModel, r: float, settings: EstimatorSettings) -> EstimateResult:
    """Dispatch one estimate according to ``settings.method``."""
    if settings.method is not Method.CERTIFICATE and settings.seed is None:
        raise ParameterInvalidError(
            'seed', None, f'The {settings.method.value} estimator needs an explicit seed.'
        )
    match settings.method:
        case Method.DIRECT:
            return estimate_direct(
                model, r, settings.n_samples, settings.seed, settings.log_eps, settings.workers
            )
        case Method.IMPORTANCE:
            n_trunc = choose_truncation(model, r, settings.log_eps)
            proposal = default_proposal(
                model,
                r,
                n_trunc,
                settings.seed,
                scale_floor=settings.scale_floor,
                mean_shift_0=settings.mean_shift_0,
            )
            return estimate_importance(
                model,
                r,
                settings.n_samples,
                proposal,
                settings.seed,
                settings.log_eps,
                settings.workers,
            )
        case Method.CERTIFICATE:
            return certificate_log_prob(model, r)
    raise EstimatorError(f'Unknown method {settings.method!r}')


def _compare_row(model: CoefficientModel, r: float, settings: EstimatorSettings) -> dict:
    profile = growth_profile(model, r)
    try:
        certificate = certificate_log_prob(model, r)
    except DegenerateProfileError:
        logger.warning(f'Certificate undefined at r={r!r}: log mu(r) = 0')
        certificate = None
    if settings.method is Method.CERTIFICATE:
        estimate = certificate
    else:
        estimate = run_estimate(model, r, settings)
    if estimate is None:
        neg_log_p = neg_log_ci_low = neg_log_ci_high = ess = math.nan
    else:
        neg_log_p = -estimate.log_p
        neg_log_ci_low, neg_log_ci_high = -estimate.log_ci_high, -estimate.log_ci_low
        ess = estimate.ess if estimate.ess is not None else math.nan
    return {
        'r': float(r),
        's': profile.s,
        'neg_log_p': neg_log_p,
        'neg_log_ci_low': neg_log_ci_low,
        'neg_log_ci_high': neg_log_ci_high,
        'neg_certificate': math.nan if certificate is None else -certificate.log_p,
        'n1_log_n1': profile.n1 * math.log(profile.n1),
        'ratio': neg_log_p / profile.s if profile.s > 0 else math.nan,
        'ess': ess,
    }


def compare_rows(
    model: CoefficientModel, r_grid: Sequence[float], settings: EstimatorSettings
) -> Iterator[dict]:
    """Yield one comparison row per radius as soon as it is computed.

    A failure at one radius leaves the rows already yielded with the caller.
    """
    for r in r_grid:
        yield _compare_row(model, r, settings)


def compare_vs_s(
    model: CoefficientModel, r_grid: Sequence[float], settings: EstimatorSettings
) -> pd.DataFrame:
    """-log P_H(r) against S(r), the certificate and N_1 log N_1 along a grid.

    Undefined cells (ratio when S = 0, certificate at degenerate radii) are NaN.
    """
    return pd.DataFrame(list(compare_rows(model, r_grid, settings)), columns=COMPARE_COLUMNS)
