"""Discrete mean of log|f| on a shrunk circle against its continuous mean."""

import numpy as np
from pydantic import BaseModel

from holescope.coeffs import CoefficientModel
from holescope.exceptions import ParameterInvalidError
from holescope.growth import get_table
from holescope.sampling import SeriesSample, draw_sample, evaluate_on_grid, scale_factors
from holescope.utils.logger import holescope_logger as logger
from holescope.zerocount import HoleStatus, has_hole

QUADRATURE_TOL = 1e-8
MAX_QUADRATURE_POINTS = 1 << 20


class DiscretizationReport(BaseModel):
    r: float
    delta: float
    n_points: int
    lhs: float
    rhs: float
    error: float
    # log mu(r) / (delta^4 N)
    bound_form: float
    # error * delta^4 N / log mu(r); None when log mu(r) = 0.
    empirical_C: float | None
    quadrature_points: int


def _mean_log_modulus(model: CoefficientModel, sample: SeriesSample, radius: float, n_points: int) -> float:
    """N^{-1} sum_j log|f(radius w^j)|, w = exp(2 pi i / N)."""
    coeffs = sample.draws * scale_factors(model, radius, sample.n_trunc)
    values = evaluate_on_grid(coeffs, n_points)
    return float(np.log(np.abs(values)).mean()) + get_table(model, radius).log_mu


def circle_mean_log_modulus(
    model: CoefficientModel, sample: SeriesSample, r: float
) -> tuple[float, int]:
    """Trapezoidal mean of log|f| on |z| = r, doubled until it moves by less than 1e-8."""
    points = max(16, 1 << (4 * (sample.n_trunc + 1) - 1).bit_length())
    previous = _mean_log_modulus(model, sample, r, points)
    while points < MAX_QUADRATURE_POINTS:
        points *= 2
        current = _mean_log_modulus(model, sample, r, points)
        if abs(current - previous) < QUADRATURE_TOL:
            return current, points
        previous = current
    logger.warning(f'Quadrature on |z|={r!r} stopped at {points} points without converging')
    return previous, points


def discretization_diagnostic(
    model: CoefficientModel, sample: SeriesSample, r: float, delta: float, n_points: int
) -> DiscretizationReport | None:
    """Returns None when the sample is not certified zero-free on the closed disk."""
    if not 0 < delta < 1:
        raise ParameterInvalidError('delta', delta, 'Must lie in (0, 1).')
    if n_points < 1:
        raise ParameterInvalidError('n_points', n_points, 'Must be positive.')
    if has_hole(model, sample, r) is not HoleStatus.HOLE:
        logger.info(f'Skipping stream {sample.stream_index}: not a certified hole at r={r!r}')
        return None
    lhs = _mean_log_modulus(model, sample, (1.0 - delta) * r, n_points)
    rhs, quadrature_points = circle_mean_log_modulus(model, sample, r)
    error = abs(lhs - rhs)
    log_mu = get_table(model, r).log_mu
    scale = delta**4 * n_points
    return DiscretizationReport(
        r=float(r),
        delta=float(delta),
        n_points=n_points,
        lhs=lhs,
        rhs=rhs,
        error=error,
        bound_form=log_mu / scale,
        empirical_C=error * scale / log_mu if log_mu > 0 else None,
        quadrature_points=quadrature_points,
    )


def hole_samples(
    model: CoefficientModel, r: float, count: int, seed: int, max_streams: int = 100_000
) -> list[SeriesSample]:
    """The first ``count`` streams that are certified holes at r."""
    found: list[SeriesSample] = []
    for stream in range(max_streams):
        sample = draw_sample(model, r, seed, stream)
        if has_hole(model, sample, r) is HoleStatus.HOLE:
            found.append(sample)
            if len(found) == count:
                return found
    logger.warning(f'Only {len(found)} hole sample(s) in {max_streams} streams at r={r!r}')
    return found
