"""Hole-probability estimators and the certificate lower bound."""

from .certificate import CertificateTerms, certificate_log_prob, certificate_terms
from .compare import COMPARE_COLUMNS, compare_rows, compare_vs_s, run_estimate
from .direct import binomial_estimate, clopper_pearson, estimate_direct
from .importance import (
    MIN_PROPOSAL_SCALE,
    default_proposal,
    estimate_importance,
    importance_estimate,
    omega_scales,
)
from .results import EstimateResult, EstimatorSettings, Method, ProposalSpec

__all__ = [
    'COMPARE_COLUMNS',
    'CertificateTerms',
    'EstimateResult',
    'EstimatorSettings',
    'MIN_PROPOSAL_SCALE',
    'Method',
    'ProposalSpec',
    'binomial_estimate',
    'certificate_log_prob',
    'certificate_terms',
    'clopper_pearson',
    'compare_rows',
    'compare_vs_s',
    'default_proposal',
    'estimate_direct',
    'estimate_importance',
    'importance_estimate',
    'omega_scales',
    'run_estimate',
]
