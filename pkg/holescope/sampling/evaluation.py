"""Overflow-free evaluation of f(r e^{i theta}) / mu(r).

The series is handled through its scaled coefficients
c_n = phi_n exp(h(n; r) - log mu(r)), each of modulus at most |phi_n|.
"""

import numpy as np
from numpy.polynomial import polynomial as P

from holescope.coeffs import CoefficientModel
from holescope.exceptions import ParameterInvalidError
from holescope.growth import get_table
from holescope.sampling.series import SeriesSample


def scale_factors(model: CoefficientModel, r: float, n_trunc: int) -> np.ndarray:
    """exp(h(n; r) - log mu(r)) for n = 0 .. n_trunc."""
    table = get_table(model, r)
    ns = np.arange(n_trunc + 1)
    h = model.log_coeffs(ns) + ns * table.log_r
    return np.exp(h - table.log_mu)


def scaled_coefficients(model: CoefficientModel, sample: SeriesSample, r: float) -> np.ndarray:
    if r > sample.r_max:
        raise ParameterInvalidError(
            'r', r, f'Sample was truncated for radii up to {sample.r_max!r}.'
        )
    return sample.draws * scale_factors(model, r, sample.n_trunc)


def derivative_bound(coeffs: np.ndarray, order: int = 1) -> np.ndarray:
    """sum n^order |c_n|: bounds the order-th theta derivative of the scaled series."""
    ns = np.arange(coeffs.shape[-1], dtype=float)
    return np.abs(coeffs) @ ns**order


def evaluate_on_grid(coeffs: np.ndarray, n_points: int) -> np.ndarray:
    """Values at theta_j = 2 pi j / n_points, for one row or a batch of rows.

    Coefficients are folded modulo n_points, then summed by one inverse FFT.
    """
    if n_points < 1:
        raise ParameterInvalidError('n_points', n_points, 'Must be positive.')
    coeffs = np.asarray(coeffs, dtype=complex)
    length = coeffs.shape[-1]
    n_fold = -(-length // n_points)
    padded = np.zeros(coeffs.shape[:-1] + (n_fold * n_points,), dtype=complex)
    padded[..., :length] = coeffs
    folded = padded.reshape(coeffs.shape[:-1] + (n_fold, n_points)).sum(axis=-2)
    return np.fft.ifft(folded, axis=-1) * n_points


def evaluate_coefficients(coeffs: np.ndarray, thetas) -> np.ndarray:
    """Horner evaluation at arbitrary angles."""
    z = np.exp(1j * np.asarray(thetas, dtype=float))
    return P.polyval(z, np.asarray(coeffs, dtype=complex))


def evaluate_on_circle(
    model: CoefficientModel, sample: SeriesSample, r: float, thetas
) -> np.ndarray:
    """f(r e^{i theta}) / mu(r) at the given angles."""
    return evaluate_coefficients(scaled_coefficients(model, sample, r), thetas)
