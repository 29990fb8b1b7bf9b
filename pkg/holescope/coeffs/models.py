import math

import numpy as np
from pydantic import BaseModel, Field

from holescope.coeffs.base import (
    CoefficientModel,
    Family,
    LogTerm,
    ValidationReport,
)
from holescope.coeffs.impl.builtin import (
    ExpExpModel,
    GaussianDecayModel,
    GefModel,
    MittagLefflerModel,
)
from holescope.coeffs.impl.table import TableModel, first_concavity_violation
from holescope.config import DEFAULT_R_MAX, LOG_TOL
from holescope.exceptions import ParameterInvalidError


class FamilySpec(BaseModel):
    """Manifest form of a coefficient family."""

    family: Family = Field(default=Family.GEF, description='Coefficient family.')
    alpha: float | None = Field(default=None, description='Mittag-Leffler order.')
    c: float | None = Field(default=None, description='Gaussian-decay rate.')
    values: list[float] | None = Field(
        default=None, description='Table of log a_n, starting with log a_0 = 0.'
    )
    r_max: float = Field(
        default=DEFAULT_R_MAX,
        description='Largest radius the support hint of a builtin family covers.',
    )


def make_family(spec: FamilySpec | Family | str, **params) -> CoefficientModel:
    """Build a validated coefficient model.

    Args:
        spec: A FamilySpec, or a family name with parameters given as keywords
            (``alpha``, ``c``, ``values``, ``r_max``).

    Raises:
        ParameterInvalidError: parameters outside their ranges.
        ModelValidationError: a table that is not a valid log-concave profile.
    """
    if not isinstance(spec, FamilySpec):
        try:
            family = Family(spec)
        except ValueError:
            raise ParameterInvalidError(
                'family', spec, f'Expected one of: {", ".join(f.value for f in Family)}.'
            )
        spec = FamilySpec(family=family, **params)
    if spec.r_max <= 1:
        raise ParameterInvalidError('r_max', spec.r_max, 'Must exceed 1.')

    match spec.family:
        case Family.GEF:
            return GefModel(r_max=spec.r_max)
        case Family.MITTAG_LEFFLER:
            if spec.alpha is None:
                raise ParameterInvalidError('alpha', None, 'mittag_leffler requires alpha.')
            return MittagLefflerModel(spec.alpha, r_max=spec.r_max)
        case Family.GAUSSIAN_DECAY:
            if spec.c is None:
                raise ParameterInvalidError('c', None, 'gaussian_decay requires c.')
            return GaussianDecayModel(spec.c, r_max=spec.r_max)
        case Family.EXP_EXP:
            return ExpExpModel(r_max=spec.r_max)
        case Family.TABLE:
            if spec.values is None:
                raise ParameterInvalidError('values', None, 'table requires values.')
            return TableModel(spec.values)
    raise ParameterInvalidError('family', spec.family)


def log_term(model: CoefficientModel, r: float, n: int) -> LogTerm:
    """h(n) = log a_n + n log r, without exponentiating anything."""
    if not r > 0:
        raise ParameterInvalidError('r', r, 'Radius must be positive.')
    if n < 0:
        raise ParameterInvalidError('n', n, 'Index must be non-negative.')
    n = int(n)
    value = model.log_coeff(n)
    if n:
        value += n * math.log(r)
    return LogTerm(n=n, value=value)


def check_log_concavity(model: CoefficientModel, n_max: int) -> ValidationReport:
    """Scan second differences of log a_n for 0 <= n <= n_max.

    A violation is reported at the first n whose increment
    log a_n - log a_{n-1} exceeds the preceding increment.
    """
    if n_max < 2:
        raise ParameterInvalidError('n_max', n_max, 'At least three coefficients are needed.')
    log_a = model.log_coeffs(np.arange(n_max + 1))
    finite = np.isfinite(log_a)
    # Zero coefficients past a polynomial's degree are log-concave trivially.
    window = log_a[: int(np.argmin(finite)) if not finite.all() else log_a.size]
    violation = first_concavity_violation(window)
    second = np.diff(window, n=2)
    worst = float(second.max()) if second.size else 0.0
    if violation is not None:
        message = f'second difference positive at n={violation}'
    else:
        message = 'log-concave on the window'
    return ValidationReport(
        check='log_concavity',
        passed=violation is None,
        n_max=n_max,
        first_violation=violation,
        worst_margin=worst,
        message=message,
    )


def check_entirety(model: CoefficientModel, n_max: int) -> ValidationReport:
    """Finite-window proxy for log a_n / n -> -inf.

    Passes when (log a_n)/n is nonincreasing on 1..n_max (or the profile
    terminates, as a polynomial does). ``worst_margin`` holds (log a_n)/n at
    the end of the window.
    """
    if n_max < 2:
        raise ParameterInvalidError('n_max', n_max, 'At least three coefficients are needed.')
    ns = np.arange(1, n_max + 1)
    log_a = model.log_coeffs(ns)
    if model.is_polynomial and not np.all(np.isfinite(log_a)):
        return ValidationReport(
            check='entirety',
            passed=True,
            n_max=n_max,
            worst_margin=-math.inf,
            message='polynomial profile',
        )
    slope = log_a / ns
    steps = np.diff(slope)
    bad = np.flatnonzero(steps > LOG_TOL * (1.0 + np.abs(slope[1:])))
    violation = int(bad[0]) + 2 if bad.size else None
    return ValidationReport(
        check='entirety',
        passed=violation is None,
        n_max=n_max,
        first_violation=violation,
        worst_margin=float(slope[-1]),
        message=(
            f'(log a_n)/n increases at n={violation}'
            if violation is not None
            else f'(log a_n)/n decreasing, reaching {slope[-1]:.6g} at n={n_max}'
        ),
    )
