import math

import mpmath
import pytest

from holescope.exceptions import DegenerateProfileError
from holescope.holeprob import Method, certificate_log_prob, certificate_terms


def _gaussian_decay_oracle() -> mpmath.mpf:
    """log P of the dominant-constant event for a_n = e^{-n^2} at r = e^2.

    There h(n) = 2n - n^2, log mu = 1, N_1 = 3 and every band m < 52 holds
    at most the one index n with n^2 - 2n = m.
    """
    mpmath.mp.dps = 40
    n1 = 3
    total = -((mpmath.sqrt(n1) + 3) ** 2)
    for n in (1, 2):
        h = 2 * n - n * n
        total += mpmath.log(1 - mpmath.exp(-mpmath.exp(-2 * h) / n1))
    for n in range(3, 60):
        m = n * n - 2 * n
        if m >= 52:
            break
        a2 = (mpmath.e ** (m - 1) / m**2) ** 2
        total += mpmath.log(1 - mpmath.exp(-a2))
    return total


def test_gaussian_decay_value(gaussian_decay):
    result = certificate_log_prob(gaussian_decay, math.exp(2.0))
    assert result.method is Method.CERTIFICATE
    assert result.log_p == pytest.approx(float(_gaussian_decay_oracle()), rel=1e-9)
    assert result.log_p == pytest.approx(-27.486, abs=1e-3)
    assert result.log_ci_low == result.log_ci_high == result.log_p


def test_terms_breakdown(gaussian_decay):
    terms = certificate_terms(gaussian_decay, math.exp(2.0))
    assert terms.n1 == 3
    assert terms.log_p_constant == pytest.approx(-((math.sqrt(3.0) + 3.0) ** 2))
    assert terms.remainder < 1e-18
    total = terms.log_p_constant + terms.log_p_significant + terms.log_p_bands
    assert terms.log_p == pytest.approx(total, rel=1e-12)
    assert terms.log_p_crude <= terms.log_p


def test_certificate_lies_below_zero(builtin_models):
    for model in builtin_models:
        result = certificate_log_prob(model, 10.0)
        assert result.log_p < 0
        assert math.isfinite(result.log_p)


def test_certificate_decreases_with_radius(gef):
    values = [certificate_log_prob(gef, r).log_p for r in (1.2, 2.0, 4.0, 8.0)]
    assert values == sorted(values, reverse=True)


def test_certificate_diagnostics(gef):
    result = certificate_log_prob(gef, 1.2)
    assert result.diagnostics['n1'] == certificate_terms(gef, 1.2).n1
    assert result.to_dict()['method'] == 'certificate'


def test_degenerate_radius(gef):
    with pytest.raises(DegenerateProfileError):
        certificate_log_prob(gef, 1.0)
