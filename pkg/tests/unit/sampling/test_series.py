import math

import numpy as np
import pytest

from holescope.exceptions import ParameterInvalidError
from holescope.sampling import (
    SeriesSample,
    choose_truncation,
    draw_cells,
    draw_sample,
    sample_coefficients,
)


def test_sample_coefficients_reads_main_stream():
    sample = sample_coefficients(3, 9, 12)
    assert sample.n_trunc == 12
    assert sample.seed == 3 and sample.stream_index == 9
    assert np.array_equal(sample.draws, draw_cells(3, 9, 0, 13))


def test_sample_is_read_only():
    sample = sample_coefficients(3, 9, 4)
    with pytest.raises(ValueError):
        sample.draws[0] = 0.0


def test_negative_truncation():
    with pytest.raises(ParameterInvalidError):
        sample_coefficients(0, 0, -1)


def test_shape_is_checked():
    with pytest.raises(ParameterInvalidError):
        SeriesSample(seed=None, stream_index=0, n_trunc=3, draws=np.zeros(2, dtype=complex))


def test_from_draws():
    sample = SeriesSample.from_draws([1.0, 2j, -1.0])
    assert sample.seed is None
    assert sample.n_trunc == 2
    assert sample.log_eps == -math.inf


def test_conjugate_and_rotation():
    sample = SeriesSample.from_draws([1.0, 1j, 2.0])
    assert np.allclose(sample.conjugate().draws, [1.0, -1j, 2.0])
    rotated = sample.rotated(math.pi / 2)
    assert np.allclose(rotated.draws, [1.0, 1j * 1j, -2.0])


def test_draw_sample_truncates_for_radius(gef):
    sample = draw_sample(gef, 2.0, seed=3, stream_index=0)
    assert sample.n_trunc == choose_truncation(gef, 2.0, -30.0)
    assert sample.r_max == 2.0
    assert sample.log_eps <= -30.0
