"""Inequality margins and empirical constants for the growth functionals.

Margins are signed so that a non-negative value means the inequality holds.
Wiman-Valiron style statements carry unspecified constants and only hold off
exceptional sets, so they are recorded rather than checked.
"""

import math
from typing import Sequence

import numpy as np
from pydantic import BaseModel

from holescope.coeffs import CoefficientModel
from holescope.exceptions import ParameterInvalidError
from holescope.growth.functionals import (
    band_counts,
    log_max_modulus,
    max_term,
    s_value,
    verify_integral_relation,
)
from holescope.growth.table import get_table

N_X_LEVELS = (1.0, 1.5, 2.0, 3.0, 5.0)
INTEGRAL_TOL = 1e-9


class InequalityCheck(BaseModel):
    name: str
    lhs: float
    rhs: float
    margin: float
    holds: bool


class NormalityReport(BaseModel):
    r: float
    log_mu: float
    nu: int
    c_emp: float | None
    nu_ratio: float
    log_max_modulus: float
    max_modulus_ratio: float


class GrowthConditionReport(BaseModel):
    r: float
    alpha: float
    gamma: float
    growth_condition_margin: float | None
    gamma_condition_margin: float | None
    lemma_ratio: float | None
    n1_ratio: float | None
    wv_main_margin: float | None
    error_term_ratio: float | None


def _check(name: str, lhs: float, rhs: float, slack: float = 0.0) -> InequalityCheck:
    """lhs <= rhs, with an absolute slack for rounding."""
    margin = rhs - lhs
    return InequalityCheck(name=name, lhs=lhs, rhs=rhs, margin=margin, holds=margin >= -slack)


def inequality_ladder(model: CoefficientModel, r: float) -> list[InequalityCheck]:
    """Every deterministic inequality between the growth functionals at r."""
    table = get_table(model, r)
    log_mu, nu, n1 = table.log_mu, table.nu, table.n1
    s = s_value(model, r)
    slack = 1e-9 * max(1.0, s)

    checks = [
        _check('nu_le_n1', float(nu), float(n1)),
        _check('s_upper', s, 2.0 * n1 * log_mu, slack),
    ]
    if log_mu > 0:
        checks.append(_check('s_lower', (n1 - 1) * log_mu, s, slack))
    for x in N_X_LEVELS:
        count = table.count_at_least((1.0 - x) * log_mu)
        checks.append(_check(f'n_x[{x:g}]', float(count), x * n1))
    if log_mu > 0:
        for m, count in band_counts(table):
            checks.append(_check(f'band[{m}]', float(count), float(m * n1)))
    if r > 1:
        _, log_mu_1 = max_term(model, 1.0)
        checks.append(_check('nu_lower', (log_mu - log_mu_1) / math.log(r), float(nu), 1e-9))
        residual = verify_integral_relation(model, r)
        checks.append(_check('integral_relation', abs(residual), INTEGRAL_TOL))
    return checks


def _b(m: np.ndarray) -> np.ndarray:
    """b(m) = 1 / (m log^2 m)."""
    return 1.0 / (m * np.log(m) ** 2)


def normality_diagnostics(model: CoefficientModel, r: float) -> NormalityReport:
    """Empirical constants for the maximal-term and central-index bounds.

    c_emp is the largest c with a_n r^n / mu(r) <= exp(-c k^2 b(|k| + nu))
    over the tabulated window, n = nu + k.
    """
    table = get_table(model, r)
    log_mu, nu = table.log_mu, table.nu
    if not log_mu > 1:
        raise ParameterInvalidError('r', r, 'Normality diagnostics need log mu(r) > 1.')
    ns = np.arange(table.h.size)
    k = ns - nu
    m = np.abs(k) + nu
    usable = (k != 0) & (m > 1) & np.isfinite(table.h)
    c_values = (log_mu - table.h[usable]) * _b(m[usable].astype(float)) / k[usable] ** 2
    c_emp = float(c_values.min()) if c_values.size else None

    log_m = log_max_modulus(model, r)
    return NormalityReport(
        r=float(r),
        log_mu=log_mu,
        nu=nu,
        c_emp=c_emp,
        nu_ratio=nu / (log_mu * math.log(log_mu) ** 2),
        log_max_modulus=log_m,
        max_modulus_ratio=log_m / log_mu,
    )


def growth_condition_report(
    model: CoefficientModel, r: float, alpha: float = 1.0, gamma: float = 1.0
) -> GrowthConditionReport:
    """Ratios behind the refined error-term statement.

    growth_condition_margin: min of log a_n + n log^alpha n over 2 <= n < N_1,
        non-negative when a(t) >= exp(-t log^alpha t) on the significant window.
    gamma_condition_margin: log log mu - gamma log log r.
    lemma_ratio: N_1^{4/5} log mu / (S^{9/10} log^{1/gamma + 8/5} S).
    n1_ratio: N_1 / (log mu log_2^2 mu).
    wv_main_margin: log mu + log(log^{1/2} mu log_2^2 mu) - log M.
    error_term_ratio: S / (N_1^{4/5} log mu).
    """
    if alpha <= 0:
        raise ParameterInvalidError('alpha', alpha, 'Must be positive.')
    if gamma <= 0:
        raise ParameterInvalidError('gamma', gamma, 'Must be positive.')
    table = get_table(model, r)
    log_mu, n1 = table.log_mu, table.n1
    s = s_value(model, r)

    growth_margin = None
    if n1 > 2:
        ns = np.arange(2, n1)
        values = model.log_coeffs(ns) + ns * np.log(ns) ** alpha
        growth_margin = float(values.min())

    gamma_margin = None
    if r > math.e and log_mu > 1:
        gamma_margin = math.log(log_mu) - gamma * math.log(math.log(r))

    lemma_ratio = None
    if s > 1 and log_mu > 0:
        lemma_ratio = n1**0.8 * log_mu / (s**0.9 * math.log(s) ** (1.0 / gamma + 1.6))

    n1_ratio = wv_margin = None
    if log_mu > 1:
        log2_mu = math.log(log_mu)
        n1_ratio = n1 / (log_mu * log2_mu**2)
        wv_margin = (
            log_mu + 0.5 * math.log(log_mu) + 2.0 * math.log(log2_mu) - log_max_modulus(model, r)
        )

    error_ratio = s / (n1**0.8 * log_mu) if log_mu > 0 else None
    return GrowthConditionReport(
        r=float(r),
        alpha=alpha,
        gamma=gamma,
        growth_condition_margin=growth_margin,
        gamma_condition_margin=gamma_margin,
        lemma_ratio=lemma_ratio,
        n1_ratio=n1_ratio,
        wv_main_margin=wv_margin,
        error_term_ratio=error_ratio,
    )


def asymptotic_constant(
    model: CoefficientModel, rs: Sequence[float], exponent: float
) -> list[tuple[float, float]]:
    """(r, S(r) / r^exponent) along a radius grid."""
    out = []
    for r in rs:
        out.append((float(r), s_value(model, r) / r**exponent))
    return out
