import json
import math

import pandas as pd
import pytest

import holescope.holeprob.compare as compare_module
from holescope.cli import (
    ANALYZE_COLUMNS,
    ESTIMATE_COLUMNS,
    EXIT_FAILED,
    EXIT_INVALID,
    EXIT_OK,
    FAILURE_MARKER,
    build_config,
    main,
    setup_parser,
)
from holescope.coeffs import Family, TableModel, save_table
from holescope.exceptions import EstimatorError, ParameterInvalidError
from holescope.holeprob import COMPARE_COLUMNS, EstimatorSettings, run_estimate
from holescope.settings import Command, ExperimentConfig, parse_r_grid

E2 = repr(math.exp(2.0))
GAUSSIAN = ['--model', 'gaussian_decay', '--c', '1']


def _read(path) -> pd.DataFrame:
    return pd.read_csv(path)


def test_no_command_is_invalid():
    assert main([]) == EXIT_INVALID


def test_analyze_hand_values(tmp_path):
    assert main(['analyze', *GAUSSIAN, '--r', E2, '--out', str(tmp_path)]) == EXIT_OK
    frame = _read(tmp_path / 'analyze.csv')
    assert list(frame.columns) == ANALYZE_COLUMNS
    row = frame.iloc[0]
    assert row['s'] == pytest.approx(2.0)
    assert row['n1'] == 3
    assert row['nu'] == 1
    assert row['log_mu'] == pytest.approx(1.0)
    assert bool(row['ladder_ok'])


def test_analyze_is_byte_identical(tmp_path):
    first, second = tmp_path / 'a', tmp_path / 'b'
    for out in (first, second):
        args = ['analyze', '--model', 'gef', '--r-grid', 'geom:1:50:5', '--out', str(out)]
        assert main(args) == EXIT_OK
    assert (first / 'analyze.csv').read_bytes() == (second / 'analyze.csv').read_bytes()
    header = (first / 'analyze.csv').read_text().splitlines()[0]
    assert header == ','.join(ANALYZE_COLUMNS)


def test_missing_family_parameter(tmp_path):
    assert main(['analyze', '--model', 'mittag_leffler', '--out', str(tmp_path)]) == EXIT_INVALID


def test_sampling_needs_seed(tmp_path):
    args = ['estimate', '--model', 'gef', '--r', '1.5', '--method', 'direct', '--out', str(tmp_path)]
    assert main(args) == EXIT_INVALID


@pytest.mark.parametrize('grid', ['a,b', '2,1', '0.5,1', 'geom:1:10:0'])
def test_bad_radius_grid(tmp_path, grid):
    assert main(['analyze', '--model', 'gef', '--r-grid', grid, '--out', str(tmp_path)]) == EXIT_INVALID


def test_estimate_certificate(tmp_path):
    args = ['estimate', *GAUSSIAN, '--r', E2, '--method', 'certificate', '--out', str(tmp_path)]
    assert main(args) == EXIT_OK
    frame = _read(tmp_path / 'estimate.csv')
    assert list(frame.columns) == ESTIMATE_COLUMNS
    assert frame.iloc[0]['log_p'] == pytest.approx(-27.486, abs=1e-3)
    assert frame.iloc[0]['method'] == 'certificate'
    diagnostics = json.loads((tmp_path / 'estimate.json').read_text())
    assert diagnostics[0]['n1'] == 3


def test_degenerate_certificate_marks_failure(tmp_path):
    args = ['estimate', '--model', 'gef', '--r', '1', '--method', 'certificate', '--out', str(tmp_path)]
    assert main(args) == EXIT_FAILED
    lines = (tmp_path / 'estimate.csv').read_text().splitlines()
    assert lines[-1].startswith(f'{FAILURE_MARKER},')


def test_verify_writes_report(tmp_path):
    args = ['verify', *GAUSSIAN, '--r', E2, '--delta', '0.2', '--out', str(tmp_path)]
    assert main(args) == EXIT_OK
    frame = _read(tmp_path / 'verify.csv')
    assert 'fail' not in set(frame['status'])
    records = json.loads((tmp_path / 'verify.json').read_text())
    assert len(records) == len(frame)


def test_compare_with_certificate(tmp_path):
    args = ['compare', *GAUSSIAN, '--r', E2, '--method', 'certificate', '--seed', '1']
    assert main([*args, '--out', str(tmp_path)]) == EXIT_OK
    row = _read(tmp_path / 'compare.csv').iloc[0]
    assert row['neg_certificate'] == pytest.approx(27.486, abs=1e-3)
    assert row['s'] == pytest.approx(2.0)


def test_compare_keeps_rows_before_a_failure(tmp_path, monkeypatch):
    def failing_at_two(model, r, settings):
        if r == 2.0:
            raise EstimatorError('no weighted hits')
        return run_estimate(model, r, settings)

    monkeypatch.setattr(compare_module, 'run_estimate', failing_at_two)
    args = ['compare', '--model', 'gef', '--r-grid', '1.5,2', '--method', 'direct']
    assert main([*args, '--samples', '200', '--seed', '1', '--out', str(tmp_path)]) == EXIT_FAILED
    lines = (tmp_path / 'compare.csv').read_text().splitlines()
    assert lines[0] == ','.join(COMPARE_COLUMNS)
    assert lines[1].startswith('1.5,')
    assert lines[2] == f'{FAILURE_MARKER},no weighted hits,,,,,,,'
    assert len(lines) == 3


def test_compare_certificate_across_degenerate_radius(tmp_path):
    args = ['compare', '--model', 'gef', '--r-grid', '1,2', '--method', 'certificate']
    assert main([*args, '--out', str(tmp_path)]) == EXIT_OK
    frame = _read(tmp_path / 'compare.csv')
    assert len(frame) == 2
    assert math.isnan(frame.iloc[0]['neg_log_p'])
    assert frame.iloc[1]['neg_log_p'] == pytest.approx(frame.iloc[1]['neg_certificate'])


def test_config_round_trip(tmp_path):
    config = ExperimentConfig(
        r_grid=[1.0, 2.0],
        commands=[Command.ANALYZE],
        estimator=EstimatorSettings(seed=3),
        out=str(tmp_path),
    )
    path = tmp_path / 'experiment.json'
    config.persist(str(path))
    assert ExperimentConfig.from_file(str(path)) == config


def test_flags_override_manifest(tmp_path):
    path = tmp_path / 'experiment.json'
    path.write_text(json.dumps({'model': {'family': 'gef'}, 'r_grid': [1.0, 2.0], 'deltas': [0.3]}))
    args = setup_parser().parse_args(['--config', str(path), 'analyze', '--r', '3'])
    config = build_config(args)
    assert config.r_grid == [3.0]
    assert config.deltas == [0.3]
    assert config.model.family is Family.GEF
    assert config.commands == [Command.ANALYZE]


def test_manifest_runs(tmp_path):
    path = tmp_path / 'experiment.json'
    manifest = {
        'model': {'family': 'gaussian_decay', 'c': 1.0},
        'r_grid': [math.exp(2.0)],
        'commands': ['analyze'],
        'out': str(tmp_path / 'out'),
    }
    path.write_text(json.dumps(manifest))
    assert main(['--config', str(path)]) == EXIT_OK
    assert (tmp_path / 'out' / 'analyze.csv').exists()


def test_missing_manifest():
    assert main(['--config', '/nonexistent/experiment.json', 'analyze']) == EXIT_INVALID


def test_table_flag(tmp_path):
    table = tmp_path / 'profile.txt'
    save_table(TableModel([0.0, -1.0, -3.0]), table)
    args = setup_parser().parse_args(['analyze', '--table', str(table), '--r', '2'])
    config = build_config(args)
    assert config.model.family is Family.TABLE
    assert config.model.values == [0.0, -1.0, -3.0]


def test_samples_flag_feeds_both_settings():
    args = setup_parser().parse_args(['verify', '--samples', '2000', '--seed', '4'])
    config = build_config(args)
    assert config.estimator.n_samples == 2000
    assert config.verify_samples == 2000


def test_parse_r_grid():
    assert parse_r_grid('geom:1:100:3') == pytest.approx([1.0, 10.0, 100.0])
    assert parse_r_grid('1, 1.5,2') == [1.0, 1.5, 2.0]
    assert parse_r_grid('geom:2:5:1') == [2.0]
    with pytest.raises(ParameterInvalidError):
        parse_r_grid('geom:1:2')
