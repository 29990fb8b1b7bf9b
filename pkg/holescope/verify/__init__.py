"""Numerical checks of the determinant, Poisson, discretization, volume and shift lemmas."""

from .covariance import (
    DeterminantReport,
    determinant_check,
    log_det_covariance,
    vandermonde_route_bound,
)
from .discretization import (
    DiscretizationReport,
    circle_mean_log_modulus,
    discretization_diagnostic,
    hole_samples,
)
from .lemmas import DeviationReport, SShiftReport, dev_bounds_spotcheck, s_shift_check
from .pointset import CirclePointSet, circle_points, shrunk_points
from .poisson import (
    PoissonAverageReport,
    PoissonBoundsReport,
    poisson_average_deviation,
    poisson_bounds_check,
    poisson_kernel,
)
from .records import CheckRecord, CheckStatus
from .suite import run_suite
from .vandermonde import vandermonde_log_product
from .volume import VolumeReport, volume_cn, volume_cn_monte_carlo

__all__ = [
    'CheckRecord',
    'CheckStatus',
    'CirclePointSet',
    'DeterminantReport',
    'DeviationReport',
    'DiscretizationReport',
    'PoissonAverageReport',
    'PoissonBoundsReport',
    'SShiftReport',
    'VolumeReport',
    'circle_mean_log_modulus',
    'circle_points',
    'determinant_check',
    'dev_bounds_spotcheck',
    'discretization_diagnostic',
    'hole_samples',
    'log_det_covariance',
    'poisson_average_deviation',
    'poisson_bounds_check',
    'poisson_kernel',
    'run_suite',
    's_shift_check',
    'shrunk_points',
    'vandermonde_log_product',
    'vandermonde_route_bound',
    'volume_cn',
    'volume_cn_monte_carlo',
]
