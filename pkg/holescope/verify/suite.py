"""Assemble every numerical check into one report."""

import math
from typing import Sequence

import numpy as np

from holescope.coeffs import CoefficientModel, check_entirety, check_log_concavity
from holescope.exceptions import ParameterInvalidError
from holescope.growth import (
    get_table,
    growth_condition_report,
    inequality_ladder,
    n1_count,
    normality_diagnostics,
)
from holescope.utils.logger import holescope_logger as logger
from holescope.verify.covariance import (
    DENSE_MAX_POINTS,
    determinant_check,
    log_det_covariance,
)
from holescope.verify.discretization import discretization_diagnostic, hole_samples
from holescope.verify.lemmas import dev_bounds_spotcheck, s_shift_check
from holescope.verify.pointset import shrunk_points
from holescope.verify.poisson import poisson_average_deviation, poisson_bounds_check
from holescope.verify.records import CheckRecord, CheckStatus
from holescope.verify.vandermonde import vandermonde_log_product
from holescope.verify.volume import volume_cn, volume_cn_monte_carlo

DEFAULT_DELTAS = (0.1, 0.2, 0.5)
MAX_DETERMINANT_POINTS = 64
CONCAVITY_WINDOW = 10_000
VOLUME_TRIPLES = 200
VOLUME_MC_SAMPLES = 10_000_000
DISCRETIZATION_POINTS = (8, 16, 32)
DISCRETIZATION_SAMPLES = 20


def _coefficient_checks(model: CoefficientModel) -> list[CheckRecord]:
    concavity = check_log_concavity(model, CONCAVITY_WINDOW)
    entirety = check_entirety(model, CONCAVITY_WINDOW)
    return [
        CheckRecord.asserted(
            'log_concavity', -concavity.worst_margin, slack=1e-12,
            first_violation=concavity.first_violation,
        ),
        CheckRecord.recorded('entirety_slope', entirety.worst_margin, passed=entirety.passed),
    ]


def _growth_checks(model: CoefficientModel, r: float) -> list[CheckRecord]:
    records = [
        CheckRecord(
            check=f'{check.name}@r={r:g}',
            margin=check.margin,
            status=CheckStatus.PASS if check.holds else CheckStatus.FAIL,
            details={'lhs': check.lhs, 'rhs': check.rhs},
        )
        for check in inequality_ladder(model, r)
    ]
    if get_table(model, r).log_mu > 1:
        normality = normality_diagnostics(model, r)
        records.append(CheckRecord.recorded(f'c_emp@r={r:g}', normality.c_emp))
        records.append(CheckRecord.recorded(f'nu_ratio@r={r:g}', normality.nu_ratio))
        records.append(
            CheckRecord.recorded(f'max_modulus_ratio@r={r:g}', normality.max_modulus_ratio)
        )
    condition = growth_condition_report(model, r)
    records.append(
        CheckRecord.recorded(
            f'growth_condition@r={r:g}',
            condition.error_term_ratio,
            **condition.model_dump(exclude={'r', 'error_term_ratio'}),
        )
    )
    shift = s_shift_check(model, r)
    if shift.applicable:
        records.append(
            CheckRecord.asserted(
                f's_shift@r={r:g}', shift.bound - shift.drop, relative_drop=shift.relative_drop
            )
        )
    else:
        records.append(
            CheckRecord.inapplicable(f's_shift@r={r:g}', f'N_1 = {shift.n1} below 32')
        )
    return records


def _determinant_checks(
    model: CoefficientModel, r: float, delta: float, n_points: int | None = None
) -> list[CheckRecord]:
    tag = f'r={r:g},delta={delta:g}'
    if n_points is None:
        n_points, _ = n1_count(model, r)
    if n_points > MAX_DETERMINANT_POINTS:
        return [CheckRecord.inapplicable(f'determinant@{tag}', f'N = {n_points} above 64')]
    stated = determinant_check(model, r, delta, n_points=n_points)
    scale = max(1.0, abs(stated.log_det))
    records = [
        # The stated configuration is not a theorem for every delta; its margin is recorded.
        CheckRecord(
            check=f'determinant_stated@{tag}',
            margin=stated.margin,
            status=CheckStatus.RECORD,
            details={'holds': stated.holds, 'n_points': stated.n_points},
        ),
        CheckRecord.asserted(f'determinant_chain@{tag}', stated.chain_margin, slack=1e-9 * scale),
    ]
    rho = (1.0 - delta) * r
    n1_shrunk, _ = n1_count(model, rho)
    own = determinant_check(model, r, delta, n_points=n1_shrunk)
    records.append(
        CheckRecord.asserted(
            f'determinant_shrunk_n1@{tag}',
            own.margin,
            slack=1e-9 * max(1.0, abs(own.log_det)),
            n_points=n1_shrunk,
        )
    )
    for n_points in sorted({stated.n_points, n1_shrunk}):
        pointset = shrunk_points(r, delta, n_points)
        direct, closed = vandermonde_log_product(pointset)
        records.append(
            CheckRecord.asserted(
                f'vandermonde@{tag},N={n_points}',
                1e-10 * n_points**2 - abs(direct - closed),
            )
        )
        if n_points <= DENSE_MAX_POINTS:
            circulant = log_det_covariance(model, pointset, 'circulant')
            dense = log_det_covariance(model, pointset, 'dense')
            records.append(
                CheckRecord.asserted(
                    f'determinant_paths@{tag},N={n_points}',
                    1e-8 * max(1.0, abs(circulant)) - abs(circulant - dense),
                )
            )
    return records


def _poisson_checks(deltas: Sequence[float]) -> list[CheckRecord]:
    records = []
    for delta in deltas:
        report = poisson_bounds_check(1.0, delta)
        records.append(
            CheckRecord.asserted(
                f'poisson_bounds@delta={delta:g}',
                min(report.min_kernel - report.lower_bound, report.upper_bound - report.max_kernel),
            )
        )
        average = poisson_average_deviation(1.0, delta, 32)
        records.append(
            CheckRecord.recorded(f'poisson_average@delta={delta:g}', average.empirical_constant)
        )
    return records


def _volume_checks(seed: int, monte_carlo: bool) -> list[CheckRecord]:
    rng = np.random.Generator(np.random.Philox(seed))
    worst = math.inf
    for _ in range(VOLUME_TRIPLES):
        n = int(rng.integers(1, 7))
        t = float(rng.uniform(0.5, 2.0))
        log_ratio = n + float(rng.uniform(0.0, 5.0))
        report = volume_cn(n, t, t**n * math.exp(-log_ratio))
        worst = min(worst, report.bound - report.exact)
    records = [CheckRecord.asserted('volume_bound', worst, slack=1e-12)]
    if monte_carlo:
        for n, t, s in ((1, 1.0, 0.3), (2, 1.0, math.exp(-3.0)), (3, 2.0, 0.1)):
            exact = volume_cn(n, t, s).exact
            estimate, se = volume_cn_monte_carlo(n, t, s, VOLUME_MC_SAMPLES, seed)
            records.append(
                CheckRecord.asserted(
                    f'volume_mc@N={n}', 3.0 * se - abs(estimate - exact), estimate=estimate
                )
            )
    return records


def _sampled_checks(
    model: CoefficientModel, r: float, n_samples: int, seed: int, sigma: float
) -> list[CheckRecord]:
    deviation = dev_bounds_spotcheck(model, r, n_samples, seed, sigma=sigma)
    return [
        CheckRecord.asserted(f'dev_small@r={r:g}', deviation.small_margin, freq=deviation.freq_small),
        CheckRecord.recorded(f'dev_large@r={r:g}', deviation.freq_large),
    ]


def _discretization_checks(model: CoefficientModel, r: float, seed: int) -> list[CheckRecord]:
    samples = hole_samples(model, r, DISCRETIZATION_SAMPLES, seed)
    if len(samples) < DISCRETIZATION_SAMPLES:
        return [CheckRecord.inapplicable(f'discretization@r={r:g}', 'too few hole samples')]
    medians = []
    for n_points in DISCRETIZATION_POINTS:
        reports = [discretization_diagnostic(model, s, r, 0.2, n_points) for s in samples]
        medians.append(float(np.median([rep.error for rep in reports if rep is not None])))
    decrease = min(a - b for a, b in zip(medians, medians[1:]))
    return [
        CheckRecord.asserted(
            f'discretization_decay@r={r:g}', decrease, medians=medians
        )
    ]


def run_suite(
    model: CoefficientModel,
    r_grid: Sequence[float],
    deltas: Sequence[float] = DEFAULT_DELTAS,
    n_samples: int = 0,
    seed: int = 0,
    n_points: int | None = None,
    sigma: float = 0.5,
) -> list[CheckRecord]:
    """Run every check; Monte Carlo checks only when ``n_samples`` > 0.

    ``n_points`` fixes the point count of the stated determinant configuration,
    which otherwise is N_1(r).
    """
    if not r_grid:
        raise ParameterInvalidError('r_grid', r_grid, 'At least one radius is required.')
    records = _coefficient_checks(model)
    for r in r_grid:
        logger.info(f'verify: {model.describe()} r={r:g}')
        records += _growth_checks(model, r)
        for delta in deltas:
            records += _determinant_checks(model, r, delta, n_points)
        if n_samples > 0:
            records += _sampled_checks(model, r, n_samples, seed, sigma)
    records += _poisson_checks(deltas)
    records += _volume_checks(seed, monte_carlo=n_samples > 0)
    if n_samples > 0:
        records += _discretization_checks(model, r_grid[0], seed)
    failures = sum(rec.status is CheckStatus.FAIL for rec in records)
    logger.info(f'verify: {len(records)} checks, {failures} failure(s)')
    return records
