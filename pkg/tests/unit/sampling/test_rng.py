import math

import numpy as np
import pytest
from scipy import stats

from holescope.exceptions import ParameterInvalidError
from holescope.sampling import (
    MAIN_NAMESPACE,
    PHASE_NAMESPACE,
    PILOT_NAMESPACE,
    draw_batch,
    draw_cell,
    draw_cells,
)


def test_draws_are_deterministic():
    first = draw_cells(7, 3, 0, 25)
    second = draw_cells(7, 3, 0, 25)
    assert np.array_equal(first, second)


def test_streams_and_namespaces_are_distinct():
    base = draw_cells(7, 3, 0, 8)
    assert not np.array_equal(base, draw_cells(7, 4, 0, 8))
    assert not np.array_equal(base, draw_cells(8, 3, 0, 8))
    for namespace in (PILOT_NAMESPACE, PHASE_NAMESPACE):
        assert not np.array_equal(base, draw_cells(7, 3, 0, 8, namespace))


@pytest.mark.parametrize('start,stop', [(3, 7), (0, 1), (1, 2), (4, 10), (9, 10)])
def test_cells_are_addressable(start, stop):
    full = draw_cells(11, 2, 0, 10)
    assert np.array_equal(draw_cells(11, 2, start, stop), full[start:stop])


def test_draw_cell_matches_slice():
    full = draw_cells(11, 2, 0, 10)
    assert draw_cell(11, 2, 5) == complex(full[5])


def test_empty_range():
    assert draw_cells(1, 0, 4, 4).size == 0


def test_batch_rows_are_streams():
    batch = draw_batch(5, range(10, 14), 6, MAIN_NAMESPACE)
    assert batch.shape == (4, 6)
    for row, stream in enumerate(range(10, 14)):
        assert np.array_equal(batch[row], draw_cells(5, stream, 0, 6))


@pytest.mark.parametrize(
    'args',
    [(-1, 0, 0, 1), (0, -1, 0, 1), (0, 0, -1, 1), (0, 0, 5, 4)],
)
def test_invalid_arguments(args):
    with pytest.raises(ParameterInvalidError):
        draw_cells(*args)


def test_standard_complex_gaussian():
    phi = draw_cells(2024, 0, 0, 200_000)
    modulus_sq = np.abs(phi) ** 2
    assert modulus_sq.mean() == pytest.approx(1.0, abs=0.015)
    assert abs(phi.mean()) < 0.01
    # Circular symmetry: E phi^2 = 0.
    assert abs((phi**2).mean()) < 0.015
    assert stats.kstest(modulus_sq, stats.expon.cdf).pvalue > 1e-3
    assert np.mean(np.abs(phi) >= 2.0) == pytest.approx(math.exp(-4.0), abs=0.0015)
