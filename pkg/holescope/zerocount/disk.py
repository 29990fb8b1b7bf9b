import math
from enum import Enum

import numpy as np

from holescope.coeffs import CoefficientModel
from holescope.config import MAX_DEPTH, TAIL_SAFETY
from holescope.exceptions import ParameterInvalidError
from holescope.sampling import SeriesSample, scale_factors, truncation_log_tail
from holescope.utils.logger import holescope_logger as logger
from holescope.zerocount.winding import ZeroCountResult, count_zeros_batch


class HoleStatus(str, Enum):
    HOLE = 'hole'
    NO_HOLE = 'no_hole'
    UNCERTAIN = 'uncertain'


def tail_bound(model: CoefficientModel, r: float, n_trunc: int) -> float:
    """Bound on |f - f_trunc| / mu(r) on the circle used in the Rouche margin."""
    log_tail = truncation_log_tail(model, r, n_trunc)
    return 0.0 if log_tail == -math.inf else TAIL_SAFETY * math.exp(log_tail)


def count_zeros_in_disk(
    model: CoefficientModel, sample: SeriesSample, r: float, max_depth: int = MAX_DEPTH
) -> ZeroCountResult:
    """Zeros of the sampled series in the open disk |z| < r."""
    if r > sample.r_max:
        raise ParameterInvalidError(
            'r', r, f'Sample was truncated for radii up to {sample.r_max!r}.'
        )
    coeffs = sample.draws * scale_factors(model, r, sample.n_trunc)
    (result,) = count_zeros_batch(
        coeffs[np.newaxis, :],
        tail_bound(model, r, sample.n_trunc),
        max_depth=max_depth,
    )
    if not result.certified:
        logger.warning(
            f'Uncertain zero count for stream {sample.stream_index} at r={r!r} '
            f'(min log|f/mu| = {result.min_log_modulus:.3g})'
        )
    return result


def classify(result: ZeroCountResult) -> HoleStatus:
    if not result.certified:
        return HoleStatus.UNCERTAIN
    return HoleStatus.HOLE if result.count == 0 else HoleStatus.NO_HOLE


def has_hole(model: CoefficientModel, sample: SeriesSample, r: float) -> HoleStatus:
    return classify(count_zeros_in_disk(model, sample, r))


def classify_batch(
    model: CoefficientModel, draws: np.ndarray, r: float, max_depth: int = MAX_DEPTH
) -> tuple[np.ndarray, np.ndarray]:
    """(hole, uncertain) flags for rows of coefficient draws truncated at r."""
    n_trunc = draws.shape[-1] - 1
    coeffs = draws * scale_factors(model, r, n_trunc)
    results = count_zeros_batch(coeffs, tail_bound(model, r, n_trunc), max_depth=max_depth)
    statuses = [classify(res) for res in results]
    hole = np.array([s is HoleStatus.HOLE for s in statuses], dtype=bool)
    uncertain = np.array([s is HoleStatus.UNCERTAIN for s in statuses], dtype=bool)
    return hole, uncertain
