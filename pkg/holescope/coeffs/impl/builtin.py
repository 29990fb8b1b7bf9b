"""Closed-form coefficient families.

All of them are log-concave with log a_n / n -> -inf, so the entirety and
concavity invariants hold analytically.
"""

import numpy as np
from scipy.special import gammaln

from holescope.coeffs.base import CoefficientModel, Family, support_hint_from_ratio
from holescope.config import DEFAULT_R_MAX
from holescope.exceptions import ParameterInvalidError


def _as_index_array(ns) -> np.ndarray:
    return np.asarray(ns, dtype=float)


class GefModel(CoefficientModel):
    """a_n = 1 / sqrt(n!): the Gaussian entire function."""

    family = Family.GEF

    def __init__(self, r_max: float = DEFAULT_R_MAX):
        super().__init__(0)
        self._n_support_hint = support_hint_from_ratio(self, r_max)

    @property
    def params(self) -> dict:
        return {}

    def log_coeffs(self, ns):
        return -0.5 * gammaln(_as_index_array(ns) + 1.0)

    def log_ratio(self, ns):
        return -0.5 * np.log1p(_as_index_array(ns))


class MittagLefflerModel(CoefficientModel):
    """a_n = 1 / Gamma(alpha n + 1)."""

    family = Family.MITTAG_LEFFLER

    def __init__(self, alpha: float, r_max: float = DEFAULT_R_MAX):
        if not np.isfinite(alpha) or alpha <= 0:
            raise ParameterInvalidError('alpha', alpha, 'Must be a positive real.')
        self.alpha = float(alpha)
        super().__init__(0)
        self._n_support_hint = support_hint_from_ratio(self, r_max)

    @property
    def params(self) -> dict:
        return {'alpha': self.alpha}

    def log_coeffs(self, ns):
        return -gammaln(self.alpha * _as_index_array(ns) + 1.0)

    def log_ratio(self, ns):
        n = _as_index_array(ns)
        return gammaln(self.alpha * n + 1.0) - gammaln(self.alpha * (n + 1.0) + 1.0)


class GaussianDecayModel(CoefficientModel):
    """a_n = exp(-c n^2)."""

    family = Family.GAUSSIAN_DECAY

    def __init__(self, c: float, r_max: float = DEFAULT_R_MAX):
        if not np.isfinite(c) or c <= 0:
            raise ParameterInvalidError('c', c, 'Must be a positive real.')
        self.c = float(c)
        super().__init__(0)
        self._n_support_hint = support_hint_from_ratio(self, r_max)

    @property
    def params(self) -> dict:
        return {'c': self.c}

    def log_coeffs(self, ns):
        n = _as_index_array(ns)
        return -self.c * n * n

    def log_ratio(self, ns):
        return -self.c * (2.0 * _as_index_array(ns) + 1.0)


class ExpExpModel(CoefficientModel):
    """a_n = exp(1 - e^n): a(t) = exp(-e^t) rescaled so that a_0 = 1."""

    family = Family.EXP_EXP

    def __init__(self, r_max: float = DEFAULT_R_MAX):
        super().__init__(0)
        self._n_support_hint = support_hint_from_ratio(self, r_max)

    @property
    def params(self) -> dict:
        return {}

    def log_coeffs(self, ns):
        with np.errstate(over='ignore'):
            return -np.expm1(_as_index_array(ns))

    def log_ratio(self, ns):
        with np.errstate(over='ignore'):
            return -np.exp(_as_index_array(ns)) * np.expm1(1.0)
