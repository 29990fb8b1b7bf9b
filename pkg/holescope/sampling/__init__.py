"""Reproducible coefficient draws, truncation and evaluation on circles."""

from .evaluation import (
    derivative_bound,
    evaluate_coefficients,
    evaluate_on_circle,
    evaluate_on_grid,
    scale_factors,
    scaled_coefficients,
)
from .rng import (
    MAIN_NAMESPACE,
    PHASE_NAMESPACE,
    PILOT_NAMESPACE,
    draw_batch,
    draw_cell,
    draw_cells,
)
from .series import SeriesSample, draw_sample, sample_coefficients
from .truncation import choose_truncation, truncation_log_tail

__all__ = [
    'MAIN_NAMESPACE',
    'PHASE_NAMESPACE',
    'PILOT_NAMESPACE',
    'SeriesSample',
    'choose_truncation',
    'derivative_bound',
    'draw_batch',
    'draw_cell',
    'draw_cells',
    'draw_sample',
    'evaluate_coefficients',
    'evaluate_on_circle',
    'evaluate_on_grid',
    'sample_coefficients',
    'scale_factors',
    'scaled_coefficients',
    'truncation_log_tail',
]
