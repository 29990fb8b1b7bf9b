#!/usr/bin/env python3
"""
holescope - growth functionals, hole-probability estimates and lemma checks
for Gaussian entire functions with log-concave coefficients.
"""

import argparse
import json
import math
import os
import sys
from typing import Sequence

import pandas as pd
from pydantic import ValidationError

from holescope import __version__
from holescope.coeffs import CoefficientModel, Family, load_table, make_family
from holescope.exceptions import (
    HoleScopeError,
    ModelValidationError,
    ParameterInvalidError,
)
from holescope.growth import (
    growth_profile,
    inequality_ladder,
    log_max_modulus,
)
from holescope.holeprob import COMPARE_COLUMNS, Method, compare_rows, run_estimate
from holescope.settings import Command, ExperimentConfig, parse_r_grid
from holescope.utils.logger import holescope_logger as logger
from holescope.utils.logger import set_log_level
from holescope.verify import CheckStatus, run_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2

FLOAT_FORMAT = '%.17g'
FAILURE_MARKER = 'FAILED'

ANALYZE_COLUMNS = [
    'r',
    'log_mu',
    'nu',
    'n1',
    'n1_prime',
    's',
    'log_max_modulus',
    'band_cutoff_m',
    'nu_le_n1_margin',
    's_upper_margin',
    's_lower_margin',
    'n_x_margin',
    'band_margin',
    'nu_lower_margin',
    'integral_margin',
    'ladder_ok',
]
ESTIMATE_COLUMNS = [
    'r',
    'method',
    'log_p',
    'log_ci_low',
    'log_ci_high',
    'n_samples',
    'ess',
    'uncertain',
    'log10_p',
    'n_hole',
    'reliable',
]
VERIFY_COLUMNS = ['check', 'margin', 'recorded_constant', 'status']


class CommandFailed(Exception):
    """An asserted invariant failed; rows produced so far are still written."""


def setup_parser():
    """Set up command line argument parser."""
    parser = argparse.ArgumentParser(
        prog='holescope',
        description='Hole probabilities of Gaussian entire functions',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Growth functionals on a geometric grid
  holescope analyze --model gef --r-grid geom:1:100:9 --out results/

  # Importance-sampled hole probability
  holescope estimate --model gef --r 1.5 --method importance --samples 10000 --seed 7

  # Every numerical check, from a manifest
  holescope --config experiment.json verify
        """,
    )
    parser.add_argument('--version', action='version', version=f'holescope {__version__}')
    parser.add_argument('--config', help='JSON experiment manifest; flags override it')
    parser.add_argument(
        '--log-level',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        help='Set logging level',
    )
    parser.add_argument('--threads', type=int, help='Worker threads for estimation')

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--model', choices=[f.value for f in Family], help='Coefficient family')
    common.add_argument('--alpha', type=float, help='Mittag-Leffler order')
    common.add_argument('--c', type=float, help='Gaussian-decay rate')
    common.add_argument('--table', help='Two-column "n log_a_n" file for --model table')
    common.add_argument('--r', type=float, help='Single radius')
    common.add_argument('--r-grid', help='Radii: "1,1.5,2" or "geom:START:STOP:COUNT"')
    common.add_argument('--method', choices=[m.value for m in Method], help='Estimator')
    common.add_argument('--samples', type=int, help='Monte Carlo sample count')
    common.add_argument('--seed', type=int, help='Root seed')
    common.add_argument('--delta', help='Comma list of circle shrink factors')
    common.add_argument('--points', type=int, help='Point count for the determinant check')
    common.add_argument('--log-eps', type=float, help='Truncation tail target (natural log)')
    common.add_argument('--sigma', type=float, help='Exponent slack of the large-maximum event')
    common.add_argument('--proposal-shift', type=float, help='Importance mean shift of phi_0')
    common.add_argument('--scale-floor', type=float, help='Floor on importance proposal scales')
    common.add_argument('--out', help='Output directory')

    subparsers = parser.add_subparsers(dest='command', help='Available commands')
    subparsers.add_parser('analyze', parents=[common], help='Deterministic growth functionals')
    subparsers.add_parser('verify', parents=[common], help='Run every numerical check')
    subparsers.add_parser('estimate', parents=[common], help='Estimate the hole probability')
    subparsers.add_parser('compare', parents=[common], help='-log P_H(r) against S(r)')
    return parser


def _overrides(args: argparse.Namespace) -> dict:
    """Flag values in manifest shape; unset flags are left out."""
    model: dict = {}
    if getattr(args, 'model', None) is not None:
        model['family'] = args.model
    if getattr(args, 'alpha', None) is not None:
        model['alpha'] = args.alpha
    if getattr(args, 'c', None) is not None:
        model['c'] = args.c
    if getattr(args, 'table', None) is not None:
        model['family'] = Family.TABLE.value
        model['values'] = list(load_table(args.table).params['values'])

    estimator: dict = {}
    for flag, key in (
        ('method', 'method'),
        ('samples', 'n_samples'),
        ('seed', 'seed'),
        ('log_eps', 'log_eps'),
        ('proposal_shift', 'mean_shift_0'),
        ('scale_floor', 'scale_floor'),
    ):
        if getattr(args, flag, None) is not None:
            estimator[key] = getattr(args, flag)
    if args.threads is not None:
        estimator['workers'] = args.threads

    out: dict = {}
    if model:
        out['model'] = model
    if estimator:
        out['estimator'] = estimator
    if getattr(args, 'r', None) is not None:
        out['r_grid'] = [args.r]
    if getattr(args, 'r_grid', None) is not None:
        out['r_grid'] = parse_r_grid(args.r_grid)
    if getattr(args, 'delta', None) is not None:
        try:
            out['deltas'] = [float(d) for d in args.delta.split(',')]
        except ValueError:
            raise ParameterInvalidError('delta', args.delta, 'Expected a comma list of floats.')
    for flag in ('points', 'sigma', 'out'):
        if getattr(args, flag, None) is not None:
            out[flag] = getattr(args, flag)
    if getattr(args, 'samples', None) is not None:
        out['verify_samples'] = args.samples
    if args.command:
        out['commands'] = [args.command]
    return out


def _merge(base: dict, overrides: dict) -> dict:
    merged = dict(base)
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = {**merged[key], **value}
        else:
            merged[key] = value
    return merged


def build_config(args: argparse.Namespace) -> ExperimentConfig:
    """Manifest from ``--config`` (if any) with flags layered on top."""
    base = ExperimentConfig.raw_from_file(args.config) if args.config else {}
    return ExperimentConfig.model_validate(_merge(base, _overrides(args)))


def _write_table(
    path: str, columns: Sequence[str], rows: list[dict], failure: str | None = None
) -> None:
    if failure is not None:
        rows = rows + [{columns[0]: FAILURE_MARKER, columns[1]: failure}]
    frame = pd.DataFrame(rows, columns=list(columns))
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, na_rep='', lineterminator='\n')
    logger.info(f'Wrote {len(rows)} row(s) to {path}')


def _write_json(path: str, payload) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(payload, f, indent=2, sort_keys=True, default=float)
        f.write('\n')


def _analyze_row(model: CoefficientModel, r: float) -> dict:
    profile = growth_profile(model, r)
    ladder = inequality_ladder(model, r)
    margins: dict[str, float] = {}
    for check in ladder:
        if check.name.startswith('n_x['):
            key = 'n_x_margin'
        elif check.name.startswith('band['):
            key = 'band_margin'
        elif check.name == 'integral_relation':
            key = 'integral_margin'
        else:
            key = f'{check.name}_margin'
        margins[key] = min(margins.get(key, math.inf), check.margin)
    row = {
        'r': profile.r,
        'log_mu': profile.log_mu,
        'nu': profile.nu,
        'n1': profile.n1,
        'n1_prime': profile.n1_prime,
        's': profile.s,
        'log_max_modulus': log_max_modulus(model, r),
        'band_cutoff_m': profile.band_cutoff_m,
        'ladder_ok': all(check.holds for check in ladder),
    }
    for column in ANALYZE_COLUMNS:
        if column.endswith('_margin'):
            row[column] = margins.get(column, math.nan)
    return row


def _run_analyze(model: CoefficientModel, config: ExperimentConfig, rows: list[dict]) -> None:
    for r in config.r_grid:
        rows.append(_analyze_row(model, r))
    bad = [row['r'] for row in rows if not row['ladder_ok']]
    if bad:
        raise CommandFailed(f'inequality ladder violated at r={bad}')


def _run_estimate(model: CoefficientModel, config: ExperimentConfig, rows: list[dict]) -> list:
    diagnostics = []
    for r in config.r_grid:
        result = run_estimate(model, r, config.estimator)
        rows.append(
            {
                'r': result.r,
                'method': result.method.value,
                'log_p': result.log_p,
                'log_ci_low': result.log_ci_low,
                'log_ci_high': result.log_ci_high,
                'n_samples': result.n_samples,
                'ess': result.ess,
                'uncertain': result.n_uncertain,
                'log10_p': result.log10_p,
                'n_hole': result.n_hole,
                'reliable': result.reliable,
            }
        )
        diagnostics.append({'r': result.r, 'method': result.method.value, **result.diagnostics})
    return diagnostics


def _run_verify(
    model: CoefficientModel, config: ExperimentConfig, rows: list[dict], json_path: str
) -> None:
    records = run_suite(
        model,
        config.r_grid,
        deltas=config.deltas,
        n_samples=config.verify_samples,
        seed=config.estimator.seed or 0,
        n_points=config.points,
        sigma=config.sigma,
    )
    for record in records:
        rows.append(
            {
                'check': record.check,
                'margin': record.margin,
                'recorded_constant': record.recorded_constant,
                'status': record.status.value,
            }
        )
    failed = [rec.check for rec in records if rec.status is CheckStatus.FAIL]
    _write_json(json_path, [rec.model_dump(mode='json') for rec in records])
    if failed:
        raise CommandFailed(f'{len(failed)} check(s) failed: {", ".join(failed)}')


def _outputs(out_dir: str, command: Command) -> tuple[str, str]:
    stem = os.path.join(out_dir, command.value)
    return f'{stem}.csv', f'{stem}.json'


def run(config: ExperimentConfig) -> int:
    """Execute the selected commands; returns the process exit code.

    Every command writes ``<out>/<command>.csv``; estimate and verify also write
    a JSON diagnostics file. A command that stops early still writes the rows
    it produced, followed by a marker row.
    """
    try:
        model = make_family(config.model)
    except (ParameterInvalidError, ModelValidationError) as e:
        logger.error(e.message)
        return EXIT_INVALID
    os.makedirs(config.out, exist_ok=True)

    for command in config.commands:
        csv_path, json_path = _outputs(config.out, command)
        rows: list[dict] = []
        columns = {
            Command.ANALYZE: ANALYZE_COLUMNS,
            Command.ESTIMATE: ESTIMATE_COLUMNS,
            Command.VERIFY: VERIFY_COLUMNS,
            Command.COMPARE: COMPARE_COLUMNS,
        }[command]
        logger.info(f'{command.value}: {model.describe()} on {len(config.r_grid)} radii')
        try:
            match command:
                case Command.ANALYZE:
                    _run_analyze(model, config, rows)
                case Command.ESTIMATE:
                    _write_json(json_path, _run_estimate(model, config, rows))
                case Command.VERIFY:
                    _run_verify(model, config, rows, json_path)
                case Command.COMPARE:
                    for row in compare_rows(model, config.r_grid, config.estimator):
                        rows.append(row)
        except CommandFailed as e:
            logger.error(f'{command.value}: {e}')
            _write_table(csv_path, columns, rows, failure=str(e))
            return EXIT_FAILED
        except (ParameterInvalidError, ModelValidationError) as e:
            logger.error(f'{command.value}: {e.message}')
            _write_table(csv_path, columns, rows, failure=e.message)
            return EXIT_INVALID
        except HoleScopeError as e:
            logger.error(f'{command.value}: {e.message}')
            _write_table(csv_path, columns, rows, failure=e.message)
            return EXIT_FAILED
        _write_table(csv_path, columns, rows)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    """Main entry point."""
    parser = setup_parser()
    args = parser.parse_args(argv)
    if args.log_level:
        set_log_level(args.log_level)

    try:
        config = build_config(args)
    except ValidationError as e:
        logger.error(f'Invalid configuration:\n{e}')
        return EXIT_INVALID
    except HoleScopeError as e:
        logger.error(e.message)
        return EXIT_INVALID
    except (OSError, json.JSONDecodeError) as e:
        logger.error(f'Cannot read configuration: {e}')
        return EXIT_INVALID
    return run(config)


if __name__ == '__main__':
    sys.exit(main())
