import numpy as np
from pydantic import BaseModel

from holescope.exceptions import ParameterInvalidError


class PoissonBoundsReport(BaseModel):
    r: float
    delta: float
    n_pairs: int
    min_kernel: float
    max_kernel: float
    lower_bound: float
    upper_bound: float
    holds: bool


class PoissonAverageReport(BaseModel):
    r: float
    delta: float
    n_points: int
    max_deviation: float
    # max_deviation * delta^2 * N
    empirical_constant: float


def poisson_kernel(r: float, z, a):
    """(r^2 - |a|^2) / |z - a|^2 for |z| = r and |a| < r.

    Its mean over the circle |z| = r is 1.
    """
    a = np.asarray(a, dtype=complex)
    if np.any(np.abs(a) >= r):
        raise ParameterInvalidError('a', a, f'Need |a| < r = {r!r}.')
    z = np.asarray(z, dtype=complex)
    return (r * r - np.abs(a) ** 2) / np.abs(z - a) ** 2


def poisson_bounds_check(r: float, delta: float, grid: int = 100) -> PoissonBoundsReport:
    """delta/2 <= P(z, a) <= 2/delta over a grid x grid set of pairs with |a| = (1 - delta) r."""
    if not 0 < delta < 1:
        raise ParameterInvalidError('delta', delta, 'Must lie in (0, 1).')
    if grid < 1:
        raise ParameterInvalidError('grid', grid, 'Must be positive.')
    angles = 2 * np.pi * np.arange(grid) / grid
    z = r * np.exp(1j * angles)
    a = (1.0 - delta) * r * np.exp(1j * angles)
    values = poisson_kernel(r, z[:, np.newaxis], a[np.newaxis, :])
    lower, upper = delta / 2, 2 / delta
    lo, hi = float(values.min()), float(values.max())
    return PoissonBoundsReport(
        r=float(r),
        delta=float(delta),
        n_pairs=int(values.size),
        min_kernel=lo,
        max_kernel=hi,
        lower_bound=lower,
        upper_bound=upper,
        holds=lower <= lo and hi <= upper,
    )


def poisson_average_deviation(
    r: float, delta: float, n_points: int, grid: int = 256
) -> PoissonAverageReport:
    """max over |z| = r of |N^{-1} sum_j P(z, z_j) - 1| for the N points on the (1 - delta) r circle."""
    if not 0 < delta < 1:
        raise ParameterInvalidError('delta', delta, 'Must lie in (0, 1).')
    if n_points < 1:
        raise ParameterInvalidError('n_points', n_points, 'Must be positive.')
    z = r * np.exp(2j * np.pi * np.arange(grid) / grid)
    nodes = (1.0 - delta) * r * np.exp(2j * np.pi * np.arange(n_points) / n_points)
    averages = poisson_kernel(r, z[:, np.newaxis], nodes[np.newaxis, :]).mean(axis=1)
    deviation = float(np.abs(averages - 1.0).max())
    return PoissonAverageReport(
        r=float(r),
        delta=float(delta),
        n_points=n_points,
        max_deviation=deviation,
        empirical_constant=deviation * delta**2 * n_points,
    )
