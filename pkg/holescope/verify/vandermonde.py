import math

import numpy as np

from holescope.exceptions import ParameterInvalidError
from holescope.verify.pointset import CirclePointSet


def vandermonde_log_product(pointset: CirclePointSet) -> tuple[float, float]:
    """(direct, closed form) for log prod_{i != j} |z_i - z_j|.

    For N equispaced points on a circle of radius rho the product is
    N^N rho^{N(N-1)}.
    """
    if not pointset.is_roots_of_unity:
        raise ParameterInvalidError('pointset', pointset, 'Expected equispaced circle points.')
    n = pointset.n_points
    z = pointset.points
    diffs = np.abs(z[:, np.newaxis] - z[np.newaxis, :])
    off_diagonal = ~np.eye(n, dtype=bool)
    direct = math.fsum(np.log(diffs[off_diagonal]).tolist())
    closed = n * math.log(n) + n * (n - 1) * pointset.log_radius
    return direct, closed
