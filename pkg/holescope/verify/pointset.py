import math
from dataclasses import dataclass, field

import numpy as np

from holescope.exceptions import ParameterInvalidError


@dataclass(frozen=True, eq=False)
class CirclePointSet:
    """z_j = radius * exp(2 pi i j / N), j = 0 .. N-1."""

    n_points: int
    radius: float
    points: np.ndarray = field(repr=False)

    @property
    def log_radius(self) -> float:
        return math.log(self.radius)

    @property
    def is_roots_of_unity(self) -> bool:
        expected = self.radius * np.exp(2j * np.pi * np.arange(self.n_points) / self.n_points)
        return self.points.shape == expected.shape and bool(
            np.allclose(self.points, expected, rtol=1e-12, atol=0.0)
        )


def circle_points(n_points: int, radius: float) -> CirclePointSet:
    if n_points < 1:
        raise ParameterInvalidError('n_points', n_points, 'Must be positive.')
    if not radius > 0:
        raise ParameterInvalidError('radius', radius, 'Must be positive.')
    points = radius * np.exp(2j * np.pi * np.arange(n_points) / n_points)
    points.setflags(write=False)
    return CirclePointSet(n_points=n_points, radius=float(radius), points=points)


def shrunk_points(r: float, delta: float, n_points: int) -> CirclePointSet:
    """N equispaced points on the circle of radius (1 - delta) r."""
    if not 0 < delta < 1:
        raise ParameterInvalidError('delta', delta, 'Must lie in (0, 1).')
    return circle_points(n_points, (1.0 - delta) * r)
