import math

import pytest

from holescope.exceptions import ParameterInvalidError
from holescope.growth import (
    asymptotic_constant,
    growth_condition_report,
    inequality_ladder,
    normality_diagnostics,
)


@pytest.mark.parametrize('r', [1.0, 1.5, math.e, 10.0, 30.0])
def test_ladder_holds(builtin_models, r):
    for model in builtin_models:
        failed = [c.name for c in inequality_ladder(model, r) if not c.holds]
        assert failed == [], f'{model.describe()} at r={r}: {failed}'


def test_ladder_names(gaussian_decay):
    names = {c.name for c in inequality_ladder(gaussian_decay, math.exp(2.0))}
    assert {'nu_le_n1', 's_upper', 's_lower', 'nu_lower', 'integral_relation'} <= names
    assert 'band[3]' in names
    assert 'n_x[2]' in names


def test_ladder_skips_lower_bounds_at_unit_radius(gef):
    names = {c.name for c in inequality_ladder(gef, 1.0)}
    assert 's_lower' not in names
    assert 'nu_lower' not in names


def test_gef_asymptotic_constant(gef):
    target = math.exp(2.0) / 4.0
    values = asymptotic_constant(gef, [25.0, 50.0, 100.0], exponent=4.0)
    errors = [abs(v - target) for _, v in values]
    assert errors[-1] < 0.05 * target
    assert errors[0] > errors[1] > errors[2]


def test_normality(gef):
    report = normality_diagnostics(gef, math.e)
    assert report.nu == 7
    assert report.c_emp is not None and report.c_emp > 0
    assert report.max_modulus_ratio >= 1.0


def test_normality_needs_growth(gef):
    with pytest.raises(ParameterInvalidError):
        normality_diagnostics(gef, 1.0)


def test_growth_condition_report(gef):
    report = growth_condition_report(gef, 10.0)
    assert report.n1_ratio is not None and report.n1_ratio > 0
    assert report.lemma_ratio is not None
    assert report.error_term_ratio is not None
    assert report.gamma_condition_margin is not None


@pytest.mark.parametrize('alpha,gamma', [(0.0, 1.0), (1.0, -1.0)])
def test_growth_condition_report_rejects(gef, alpha, gamma):
    with pytest.raises(ParameterInvalidError):
        growth_condition_report(gef, 10.0, alpha=alpha, gamma=gamma)
