"""Covariance determinant of the random series at equispaced circle points.

Sigma_ij = sum_k a_k^2 (z_i conj(z_j))^k is circulant for z_j = rho w^j, with
eigenvalues N sum_{k = m mod N} a_k^2 rho^{2k}. The dense path factorizes the
matrix directly and serves as a cross-check for small N.
"""

import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.linalg import cholesky
from scipy.special import logsumexp

from holescope.coeffs import CoefficientModel
from holescope.exceptions import ParameterInvalidError
from holescope.growth import get_table, n1_count, s_value
from holescope.verify.pointset import CirclePointSet, shrunk_points

DENSE_MAX_POINTS = 8
DET_TOL = 1e-9


def log_det_circulant(model: CoefficientModel, pointset: CirclePointSet) -> float:
    if not pointset.is_roots_of_unity:
        raise ParameterInvalidError(
            'pointset', pointset, 'The circulant path needs equispaced circle points.'
        )
    n = pointset.n_points
    table = get_table(model, pointset.radius)
    two_h = 2.0 * table.h
    padded = np.full(-(-two_h.size // n) * n, -np.inf)
    padded[: two_h.size] = two_h
    with np.errstate(divide='ignore'):
        class_sums = logsumexp(padded.reshape(-1, n), axis=0)
    return math.fsum((math.log(n) + class_sums).tolist())


def log_det_dense(model: CoefficientModel, pointset: CirclePointSet) -> float:
    """Cholesky factorization of Sigma for any point set with common modulus."""
    radii = np.abs(pointset.points)
    if not np.allclose(radii, pointset.radius, rtol=1e-12):
        raise ParameterInvalidError('pointset', pointset, 'Points must share one modulus.')
    table = get_table(model, pointset.radius)
    finite = np.isfinite(table.h)
    ks = np.flatnonzero(finite)
    log_mu = table.log_mu
    weights = np.exp(2.0 * (table.h[finite] - log_mu))
    u = pointset.points / pointset.radius
    gram = u[:, np.newaxis] * np.conj(u)[np.newaxis, :]
    scaled = np.einsum('k,ijk->ij', weights, gram[:, :, np.newaxis] ** ks)
    factor = cholesky(scaled, lower=True)
    n = pointset.n_points
    return 2.0 * n * log_mu + 2.0 * float(np.log(np.abs(np.diag(factor))).sum())


def log_det_covariance(
    model: CoefficientModel, pointset: CirclePointSet, method: str = 'circulant'
) -> float:
    """log det Sigma; ``method`` is 'circulant' or 'dense'."""
    if method == 'circulant':
        return log_det_circulant(model, pointset)
    if method == 'dense':
        if pointset.n_points > DENSE_MAX_POINTS:
            raise ParameterInvalidError(
                'n_points', pointset.n_points, f'Dense path is limited to {DENSE_MAX_POINTS}.'
            )
        return log_det_dense(model, pointset)
    raise ParameterInvalidError('method', method, "Expected 'circulant' or 'dense'.")


def vandermonde_route_bound(model: CoefficientModel, pointset: CirclePointSet) -> float:
    """N log N + 2 sum_{n < N} h(n; rho): each eigenvalue keeps only its smallest index."""
    n = pointset.n_points
    ns = np.arange(n)
    h = model.log_coeffs(ns) + ns * pointset.log_radius
    return n * math.log(n) + 2.0 * math.fsum(h.tolist())


@dataclass(frozen=True)
class DeterminantReport:
    r: float
    delta: float
    n_points: int
    log_det: float
    s_shrunk: float
    vandermonde_bound: float
    # log det - S((1 - delta) r)
    margin: float
    # log det - vandermonde_bound; non-negative for every configuration.
    chain_margin: float

    @property
    def holds(self) -> bool:
        return self.margin >= -DET_TOL * max(1.0, abs(self.log_det))

    def to_dict(self) -> dict:
        return {**asdict(self), 'holds': self.holds}


def determinant_check(
    model: CoefficientModel, r: float, delta: float, n_points: int | None = None
) -> DeterminantReport:
    """log det Sigma at N points on the (1 - delta) r circle against S((1 - delta) r).

    N defaults to N_1(r).
    """
    if n_points is None:
        n_points, _ = n1_count(model, r)
    pointset = shrunk_points(r, delta, n_points)
    log_det = log_det_circulant(model, pointset)
    bound = vandermonde_route_bound(model, pointset)
    s_shrunk = s_value(model, pointset.radius)
    return DeterminantReport(
        r=float(r),
        delta=float(delta),
        n_points=n_points,
        log_det=log_det,
        s_shrunk=s_shrunk,
        vandermonde_bound=bound,
        margin=log_det - s_shrunk,
        chain_margin=log_det - bound,
    )
