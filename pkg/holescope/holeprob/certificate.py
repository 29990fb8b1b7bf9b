"""Exact probability of the dominant-constant-term event.

The event asks for
  (i)   |phi_0| >= sqrt(N_1) + 3,
  (ii)  |phi_n| <= exp(-h(n)) / sqrt(N_1) for 1 <= n < N_1,
  (iii) |phi_n| <= mu^{m-1} / (N_{m,m+1} m^2) for n in band m.
On it the constant term dominates the rest of the series on the closed
disk, so its probability is a lower bound for the hole probability. All
three parts use the exact law P(|phi| >= t) = exp(-t^2).
"""

import math
from dataclasses import asdict, dataclass

import numpy as np

from holescope.coeffs import CoefficientModel
from holescope.config import BAND_DEPTH
from holescope.exceptions import DegenerateProfileError, HoleScopeError
from holescope.growth import LogTermTable, band_counts, band_cutoff, get_table
from holescope.holeprob.results import EstimateResult, Method
from holescope.utils.logmath import log1mexp_of_log, log_fsum

REMAINDER_TARGET = 1e-18
MAX_REMAINDER_BANDS = 100_000


@dataclass(frozen=True)
class CertificateTerms:
    r: float
    n1: int
    log_p_constant: float
    log_p_significant: float
    log_p_bands: float
    # Union bound on the bands past the enumerated range.
    remainder: float
    log_p: float
    # Same event with the small-ball bracket P(|phi| <= t) >= t^2 / 2 (t <= 1).
    log_p_crude: float

    def to_dict(self) -> dict:
        return asdict(self)


def _log_remainder(table: LogTermTable, n1: int, first_m: int) -> float:
    """log sum_{m >= first_m} m N_1 exp(-mu^{2(m-1)} / (m^6 N_1^2)), using N_{m,m+1} <= m N_1."""
    log_mu = table.log_mu
    log_n1 = math.log(n1)
    terms = []
    for m in range(first_m, first_m + MAX_REMAINDER_BANDS):
        log_a2 = 2.0 * (m - 1) * log_mu - 6.0 * math.log(m) - 2.0 * log_n1
        log_term = math.log(m) + log_n1 - math.exp(min(log_a2, 700.0))
        terms.append(log_term)
        if log_term < -745.0 and log_a2 > 0:
            break
    return float(np.logaddexp.reduce(terms))


def _crude(log_t2: np.ndarray) -> np.ndarray:
    """Small-ball lower bound log(t^2 / 2) where t <= 1, exact otherwise."""
    return np.where(log_t2 <= 0.0, log_t2 - math.log(2.0), log1mexp_of_log(log_t2))


def _terms_from_table(table: LogTermTable) -> CertificateTerms:
    log_mu = table.log_mu
    n1 = table.n1
    log_n1 = math.log(n1)

    log_p_constant = -((math.sqrt(n1) + 3.0) ** 2)

    log_lambda2 = -2.0 * table.h[1:n1] - log_n1
    log_p_significant = log_fsum(log1mexp_of_log(log_lambda2))

    bands = band_counts(table)
    if bands:
        ms = np.array([m for m, _ in bands], dtype=float)
        counts = np.array([c for _, c in bands], dtype=float)
        log_a2 = 2.0 * ((ms - 1.0) * log_mu - np.log(counts) - 2.0 * np.log(ms))
        log_p_bands = log_fsum(counts * log1mexp_of_log(log_a2))
        crude_bands = log_fsum(counts * _crude(log_a2))
    else:
        log_p_bands = crude_bands = 0.0

    remainder = math.exp(_log_remainder(table, n1, band_cutoff(table)))
    log_p = log_p_constant + log_p_significant + log_p_bands + math.log1p(-min(remainder, 1.0))
    log_p_crude = (
        log_p_constant
        + log_fsum(_crude(log_lambda2))
        + crude_bands
        + math.log1p(-min(remainder, 1.0))
    )
    return CertificateTerms(
        r=table.r,
        n1=n1,
        log_p_constant=log_p_constant,
        log_p_significant=log_p_significant,
        log_p_bands=log_p_bands,
        remainder=remainder,
        log_p=log_p,
        log_p_crude=min(log_p_crude, log_p),
    )


def certificate_terms(model: CoefficientModel, r: float) -> CertificateTerms:
    """Factor-by-factor breakdown of the certificate at radius r.

    Raises:
        DegenerateProfileError: log mu(r) = 0, where the bands are undefined.
    """
    depth = BAND_DEPTH
    for _ in range(4):
        table = get_table(model, r, depth=depth)
        if table.log_mu <= 0:
            raise DegenerateProfileError(r, 'The certificate')
        terms = _terms_from_table(table)
        if terms.remainder <= REMAINDER_TARGET:
            return terms
        depth *= 2
    if terms.remainder >= 1.0:
        raise HoleScopeError(f'Certificate band remainder did not converge at r={r!r}')
    return terms


def certificate_log_prob(model: CoefficientModel, r: float) -> EstimateResult:
    """Rigorous lower bound on log P_H(r)."""
    terms = certificate_terms(model, r)
    return EstimateResult(
        method=Method.CERTIFICATE,
        r=float(r),
        log_p=terms.log_p,
        log_ci_low=terms.log_p,
        log_ci_high=terms.log_p,
        diagnostics=terms.to_dict(),
    )
