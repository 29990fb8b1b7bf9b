"""Importance sampling with a tilt shaped like the dominant-constant-term event.

Proposal draws are psi_0 = (b + phi_0) e^{i U} with U a uniform phase and
psi_n = sigma_n phi_n, built from the same counter streams as the direct
estimator, with log-likelihood ratio
  b^2 - log I_0(2 b |psi_0|) + sum_n [2 log sigma_n - |psi_n|^2 (1 - 1 / sigma_n^2)].
Without the phase the first term is b^2 - 2 b Re psi_0.
"""

import math
from functools import partial
from typing import Callable

import numpy as np
from scipy.special import logsumexp
from scipy.stats import norm

from holescope.coeffs import CoefficientModel
from holescope.config import (
    CHUNK_SIZE,
    CI_LEVEL,
    DEFAULT_LOG_EPS,
    INITIAL_GRID,
    MIN_ESS,
    MIN_PROPOSAL_SCALE,
)
from holescope.exceptions import EstimatorError, ParameterInvalidError
from holescope.growth import get_table
from holescope.holeprob.results import EstimateResult, Method, ProposalSpec
from holescope.holeprob.sampler import run_streams
from holescope.sampling import (
    PILOT_NAMESPACE,
    choose_truncation,
    draw_batch,
    evaluate_on_grid,
    scale_factors,
)
from holescope.utils.logger import holescope_logger as logger
from holescope.zerocount import classify_batch

MIN_IMPORTANCE_SAMPLES = 1000
PILOT_SAMPLES = 256

Indicator = Callable[[np.ndarray], np.ndarray | tuple[np.ndarray, np.ndarray]]


def omega_scales(model: CoefficientModel, r: float, n_trunc: int) -> np.ndarray:
    """sigma_n = min(1, e^{-h(n)} / sqrt(N_1)) on significant n, 1 on the tail."""
    table = get_table(model, r)
    n1 = table.n1
    ns = np.arange(1, n_trunc + 1)
    h = model.log_coeffs(ns) + ns * table.log_r
    sigma = np.ones(n_trunc)
    significant = ns < n1
    sigma[significant] = np.minimum(1.0, np.exp(-h[significant]) / math.sqrt(n1))
    return sigma


def _pilot_shift(model: CoefficientModel, r: float, n_trunc: int, sigma: np.ndarray, seed: int) -> float:
    """Median over pilot draws of max |g| on the circle, g the proposal's
    non-constant part: the level at which phi_0 starts to dominate."""
    if n_trunc == 0:
        return 0.0
    factors = scale_factors(model, r, n_trunc)
    phi = draw_batch(seed, range(PILOT_SAMPLES), n_trunc + 1, PILOT_NAMESPACE)
    coeffs = phi * np.concatenate([[0.0], sigma]) * factors
    grid = max(INITIAL_GRID, 1 << (4 * (n_trunc + 1) - 1).bit_length())
    peaks = np.abs(evaluate_on_grid(coeffs, grid)).max(axis=1)
    log_mu = get_table(model, r).log_mu
    return float(np.median(peaks)) * math.exp(log_mu)


def default_proposal(
    model: CoefficientModel,
    r: float,
    n_trunc: int,
    seed: int,
    scale_floor: float = MIN_PROPOSAL_SCALE,
    mean_shift_0: float | None = None,
) -> ProposalSpec:
    """Event-shaped scales floored at ``scale_floor``; the phi_0 shift defaults to
    a pilot estimate of the dominance level."""
    if not 0.0 < scale_floor <= 1.0:
        raise ParameterInvalidError('scale_floor', scale_floor, 'Must lie in (0, 1].')
    sigma = np.maximum(omega_scales(model, r, n_trunc), scale_floor)
    if mean_shift_0 is None:
        mean_shift_0 = _pilot_shift(model, r, n_trunc, sigma, seed)
    logger.debug(f'proposal at r={r!r}: shift={mean_shift_0:.4g}, min scale={sigma.min(initial=1.0):.3g}')
    return ProposalSpec(mean_shift_0=mean_shift_0, scales=sigma.tolist())


def _weighted_result(
    method: Method,
    r: float,
    hole: np.ndarray,
    uncertain: np.ndarray,
    log_weight: np.ndarray,
    level: float = CI_LEVEL,
) -> EstimateResult:
    n = hole.size
    if not hole.any():
        raise EstimatorError('Every indicator-weight product is zero; no hole was sampled.')
    z = float(norm.ppf(0.5 + level / 2))

    def moments(mask: np.ndarray) -> tuple[float, float]:
        """log of the mean and of the standard error of w 1{mask}."""
        lw = log_weight[mask]
        shift = float(lw.max())
        v = np.zeros(n)
        v[mask] = np.exp(lw - shift)
        se = float(v.std(ddof=1)) / math.sqrt(n)
        return shift + math.log(v.mean()), shift + math.log(se) if se > 0 else -math.inf

    log_p, log_se = moments(hole)
    lw = log_weight[hole]
    ess = float(math.exp(2 * logsumexp(lw) - logsumexp(2 * lw)))

    p, se = math.exp(log_p), math.exp(log_se)
    low = p - z * se
    log_low = math.log(low) if low > 0 else -math.inf
    if uncertain.any():
        log_p_high, log_se_high = moments(hole | uncertain)
        high = math.exp(log_p_high) + z * math.exp(log_se_high)
    else:
        high = p + z * se
    reliable = ess >= MIN_ESS
    if not reliable:
        logger.warning(f'Importance sampling ESS {ess:.1f} below {MIN_ESS:g} at r={r!r}')
    return EstimateResult(
        method=method,
        r=float(r),
        log_p=min(log_p, 0.0),
        log_ci_low=min(log_low, 0.0),
        log_ci_high=min(math.log(high), 0.0),
        n_samples=n,
        n_hole=int(hole.sum()),
        n_uncertain=int(uncertain.sum()),
        ess=ess,
        reliable=reliable,
    )


def importance_estimate(
    indicator: Indicator,
    proposal: ProposalSpec,
    n_samples: int,
    seed: int,
    r: float = math.nan,
    workers: int | None = None,
) -> EstimateResult:
    """Importance estimate of P(indicator) for any event of phi_0 .. phi_{n_trunc}.

    ``indicator`` maps rows of draws to a boolean array, or to (hit, uncertain).
    """
    if n_samples < MIN_IMPORTANCE_SAMPLES:
        raise ParameterInvalidError(
            'n_samples', n_samples, f'Importance sampling needs at least {MIN_IMPORTANCE_SAMPLES}.'
        )

    def classifier(rows: np.ndarray):
        out = indicator(rows)
        if isinstance(out, tuple):
            return out
        return np.asarray(out, dtype=bool), np.zeros(rows.shape[0], dtype=bool)

    outcome = run_streams(
        classifier,
        n_samples,
        seed,
        proposal.n_trunc,
        shift=proposal.mean_shift_0,
        scales=proposal.scale_array(),
        random_phase=proposal.random_phase,
        workers=workers,
    )
    return _weighted_result(
        Method.IMPORTANCE, r, outcome.hole, outcome.uncertain, outcome.log_weight
    )


def estimate_importance(
    model: CoefficientModel,
    r: float,
    n_samples: int,
    proposal: ProposalSpec | None,
    seed: int,
    log_eps: float = DEFAULT_LOG_EPS,
    workers: int | None = None,
) -> EstimateResult:
    """Importance estimate of P_H(r); ``proposal=None`` selects default_proposal."""
    n_trunc = choose_truncation(model, r, log_eps)
    if proposal is None:
        proposal = default_proposal(model, r, n_trunc, seed)
    elif proposal.n_trunc != n_trunc:
        raise ParameterInvalidError(
            'proposal', f'{proposal.n_trunc} scales', f'Expected {n_trunc} for this truncation.'
        )
    logger.info(
        f'importance: {model.describe()} r={r!r} n_trunc={n_trunc} samples={n_samples} '
        f'shift={proposal.mean_shift_0:.4g}'
    )
    result = importance_estimate(
        partial(_classify, model, r), proposal, n_samples, seed, r=r, workers=workers
    )
    result.diagnostics = {
        'n_trunc': n_trunc,
        'seed': seed,
        'log_eps': log_eps,
        'mean_shift_0': proposal.mean_shift_0,
        'min_scale': min(proposal.scales, default=1.0),
        'chunk_size': CHUNK_SIZE,
    }
    return result


def _classify(model: CoefficientModel, r: float, draws: np.ndarray):
    return classify_batch(model, draws, r)
