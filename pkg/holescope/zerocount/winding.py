"""Argument-principle zero counting with certified margins."""

import math
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Callable

import numpy as np

from holescope.config import INITIAL_GRID, MAX_DEPTH
from holescope.exceptions import ParameterInvalidError
from holescope.sampling.evaluation import derivative_bound, evaluate_on_grid
from holescope.utils.logger import holescope_logger as logger

MAX_PHASE_STEP = math.pi / 2


class CountStatus(str, Enum):
    CERTIFIED = 'certified'
    UNCERTAIN = 'uncertain'


@dataclass(frozen=True)
class ZeroCountResult:
    count: int
    min_log_modulus: float
    refinement_depth: int
    status: CountStatus
    grid_size: int = 0

    @property
    def certified(self) -> bool:
        return self.status is CountStatus.CERTIFIED

    def to_dict(self) -> dict:
        result = asdict(self)
        result['status'] = self.status.value
        return result


def _check_grid(initial_grid: int, max_depth: int) -> None:
    if initial_grid < 16 or initial_grid & (initial_grid - 1):
        raise ParameterInvalidError(
            'initial_grid', initial_grid, 'Must be a power of two, at least 16.'
        )
    if max_depth < 0:
        raise ParameterInvalidError('max_depth', max_depth, 'Must be non-negative.')


def _polygon_distance(values: np.ndarray) -> np.ndarray:
    """Distance from 0 to the closed polygon through the sampled values, per row."""
    step = np.roll(values, -1, axis=-1) - values
    length_sq = np.abs(step) ** 2
    with np.errstate(divide='ignore', invalid='ignore'):
        t = np.clip(-(np.conj(values) * step).real / length_sq, 0.0, 1.0)
    t = np.where(length_sq > 0, t, 0.0)
    return np.abs(values + t * step).min(axis=-1)


def _resolve(
    values: np.ndarray, floor: np.ndarray, curve_floor: np.ndarray | None = None
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Winding count, minimum modulus and resolution flag per row.

    A row resolves when every phase step is below pi/2 and the sampled
    minimum exceeds ``floor``, or when the polygon through the samples keeps
    more than ``curve_floor`` away from 0. Each chord then turns by less than
    pi, so the principal step angles sum to the winding.
    """
    closed = np.concatenate([values, values[..., :1]], axis=-1)
    with np.errstate(divide='ignore', invalid='ignore'):
        steps = np.angle(closed[..., 1:] / closed[..., :-1])
    modulus = np.abs(values).min(axis=-1)
    resolved = (np.abs(steps) < MAX_PHASE_STEP).all(axis=-1) & (modulus > floor)
    if curve_floor is not None:
        resolved |= _polygon_distance(values) > curve_floor
    counts = np.rint(np.nansum(steps, axis=-1) / (2 * math.pi)).astype(np.int64)
    return counts, modulus, resolved


def winding_number(
    evaluator: Callable[[int], np.ndarray],
    initial_grid: int = INITIAL_GRID,
    max_depth: int = MAX_DEPTH,
    floor: Callable[[int], float] | float = 0.0,
) -> ZeroCountResult:
    """Winding number of a closed curve sampled on equispaced grids.

    Args:
        evaluator: maps a grid size M to the values at theta_j = 2 pi j / M.
        initial_grid: first grid size; doubled until resolved.
        max_depth: number of doublings allowed.
        floor: minimum sampled modulus required for certification, or a
            function of the grid size.
    """
    _check_grid(initial_grid, max_depth)
    floor_at = floor if callable(floor) else (lambda _m: floor)
    grid = initial_grid
    for depth in range(max_depth + 1):
        values = np.asarray(evaluator(grid), dtype=complex)
        count, modulus, resolved = _resolve(values, np.float64(floor_at(grid)))
        logger.debug(f'winding: depth={depth} grid={grid} min|f|={modulus:.3e}')
        if resolved:
            return ZeroCountResult(
                count=int(count),
                min_log_modulus=float(np.log(modulus)),
                refinement_depth=depth,
                status=CountStatus.CERTIFIED,
                grid_size=grid,
            )
        if depth < max_depth:
            grid *= 2
    with np.errstate(divide='ignore'):
        min_log = float(np.log(modulus))
    return ZeroCountResult(
        count=max(int(count), 0),
        min_log_modulus=min_log,
        refinement_depth=max_depth,
        status=CountStatus.UNCERTAIN,
        grid_size=grid,
    )


def count_zeros_batch(
    coeffs: np.ndarray,
    tail_bounds: np.ndarray,
    initial_grid: int | None = None,
    max_depth: int = MAX_DEPTH,
) -> list[ZeroCountResult]:
    """Certified winding counts for rows of scaled coefficients.

    A row is certified once every phase step is below pi/2 and the sampled
    minimum exceeds tail_bound + D1 * dtheta, or once the polygon through the
    samples stays farther than tail_bound + D2 * dtheta**2 / 8 from 0.
    Dk = sum n**k |c_n| bounds the k-th angular derivative, and D2 * dtheta**2 / 8
    bounds the gap between the curve and its chords. Only unresolved rows are
    re-evaluated on finer grids.
    """
    coeffs = np.atleast_2d(np.asarray(coeffs, dtype=complex))
    n_rows, length = coeffs.shape
    tail_bounds = np.broadcast_to(np.asarray(tail_bounds, dtype=float), (n_rows,))
    if initial_grid is None:
        initial_grid = max(INITIAL_GRID, 1 << max(0, 4 * length - 1).bit_length())
    _check_grid(initial_grid, max_depth)
    lipschitz = derivative_bound(coeffs)
    curvature = derivative_bound(coeffs, order=2)

    results: list[ZeroCountResult | None] = [None] * n_rows
    pending = np.arange(n_rows)
    grid = initial_grid
    for depth in range(max_depth + 1):
        values = evaluate_on_grid(coeffs[pending], grid)
        spacing = 2 * math.pi / grid
        floor = tail_bounds[pending] + lipschitz[pending] * spacing
        curve_floor = tail_bounds[pending] + curvature[pending] * spacing**2 / 8
        counts, modulus, resolved = _resolve(values, floor, curve_floor)
        last = depth == max_depth
        for i, row in enumerate(pending):
            if resolved[i] or last:
                with np.errstate(divide='ignore'):
                    min_log = float(np.log(modulus[i]))
                results[row] = ZeroCountResult(
                    count=max(int(counts[i]), 0),
                    min_log_modulus=min_log,
                    refinement_depth=depth,
                    status=CountStatus.CERTIFIED if resolved[i] else CountStatus.UNCERTAIN,
                    grid_size=grid,
                )
        pending = pending[~resolved]
        if pending.size == 0 or last:
            break
        logger.debug(f'winding: {pending.size} row(s) unresolved at grid {grid}')
        grid *= 2
    if pending.size:
        logger.warning(f'{pending.size} zero count(s) left uncertain after {max_depth} refinements')
    return results  # type: ignore[return-value]
