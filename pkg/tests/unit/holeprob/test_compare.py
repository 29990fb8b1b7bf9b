import math

import pytest

import holescope.holeprob.compare as compare_module
from holescope.exceptions import EstimatorError, ParameterInvalidError
from holescope.holeprob import (
    COMPARE_COLUMNS,
    EstimatorSettings,
    Method,
    certificate_log_prob,
    compare_rows,
    compare_vs_s,
    run_estimate,
)


def test_run_estimate_dispatches_certificate(gaussian_decay):
    settings = EstimatorSettings(method=Method.CERTIFICATE)
    result = run_estimate(gaussian_decay, math.exp(2.0), settings)
    assert result.method is Method.CERTIFICATE


@pytest.mark.parametrize('method', [Method.DIRECT, Method.IMPORTANCE])
def test_sampling_methods_need_a_seed(gef, method):
    with pytest.raises(ParameterInvalidError):
        run_estimate(gef, 1.0, EstimatorSettings(method=method))


def test_compare_certificate_row(gaussian_decay):
    settings = EstimatorSettings(method=Method.CERTIFICATE)
    frame = compare_vs_s(gaussian_decay, [math.exp(2.0)], settings)
    assert list(frame.columns) == COMPARE_COLUMNS
    row = frame.iloc[0]
    assert row['s'] == pytest.approx(2.0)
    assert row['neg_certificate'] == pytest.approx(27.486, abs=1e-3)
    assert row['neg_log_p'] == pytest.approx(row['neg_certificate'])
    assert row['ratio'] == pytest.approx(row['neg_certificate'] / 2.0)
    assert row['n1_log_n1'] == pytest.approx(3.0 * math.log(3.0))
    assert math.isnan(row['ess'])


def test_compare_degenerate_radius(gef):
    settings = EstimatorSettings(method=Method.DIRECT, n_samples=500, seed=2)
    frame = compare_vs_s(gef, [1.0], settings)
    row = frame.iloc[0]
    assert row['s'] == 0.0
    assert math.isnan(row['ratio'])
    assert math.isnan(row['neg_certificate'])
    assert row['neg_log_ci_low'] <= row['neg_log_p'] <= row['neg_log_ci_high']


@pytest.mark.slow
def test_direct_and_importance_agree_at_unit_radius(gef):
    direct = run_estimate(
        gef, 1.0, EstimatorSettings(method=Method.DIRECT, n_samples=100_000, seed=1)
    )
    weighted = run_estimate(
        gef, 1.0, EstimatorSettings(method=Method.IMPORTANCE, n_samples=10_000, seed=1)
    )
    assert weighted.log_ci_low <= direct.log_ci_high
    assert direct.log_ci_low <= weighted.log_ci_high


@pytest.mark.slow
def test_importance_respects_certificate(gef):
    settings = EstimatorSettings(method=Method.IMPORTANCE, n_samples=20_000, seed=7)
    result = run_estimate(gef, 2.0, settings)
    assert math.isfinite(result.log_p)
    assert result.log_ci_high >= certificate_log_prob(gef, 2.0).log_p


def test_certificate_method_leaves_degenerate_cells_empty(gef):
    frame = compare_vs_s(gef, [1.0, 2.0], EstimatorSettings(method=Method.CERTIFICATE))
    first, second = frame.iloc[0], frame.iloc[1]
    assert math.isnan(first['neg_log_p'])
    assert math.isnan(first['neg_certificate'])
    assert second['neg_log_p'] == pytest.approx(second['neg_certificate'])


def test_rows_are_yielded_before_a_later_failure(gef, monkeypatch):
    def failing_at_two(model, r, settings):
        if r == 2.0:
            raise EstimatorError('no weighted hits')
        return run_estimate(model, r, settings)

    monkeypatch.setattr(compare_module, 'run_estimate', failing_at_two)
    settings = EstimatorSettings(method=Method.DIRECT, n_samples=200, seed=3)
    collected = []
    with pytest.raises(EstimatorError):
        for row in compare_rows(gef, [1.5, 2.0], settings):
            collected.append(row)
    assert [row['r'] for row in collected] == [1.5]
    assert list(collected[0]) == COMPARE_COLUMNS


@pytest.mark.slow
def test_importance_grid_tracks_s(gef):
    settings = EstimatorSettings(method=Method.IMPORTANCE, n_samples=20_000, seed=5)
    frame = compare_vs_s(gef, [1.5, 2.0, 2.5], settings)
    neg_log_p = frame['neg_log_p'].to_list()
    assert neg_log_p == sorted(neg_log_p)
    assert (frame['neg_log_ci_low'] <= frame['neg_certificate']).all()
    assert (frame.loc[frame['r'] <= 2.0, 'ess'] >= 100).all()
    resolved = frame[frame['ess'] >= 100]
    assert resolved['ratio'].between(0.3, 3.0).all()
