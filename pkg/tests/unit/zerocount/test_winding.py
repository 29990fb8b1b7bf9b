import math

import numpy as np
import pytest
from scipy.special import gammaln

from holescope.exceptions import ParameterInvalidError
from holescope.sampling import draw_batch
from holescope.zerocount import CountStatus, count_zeros_batch, winding_number


def _circle(fn):
    def evaluator(m: int) -> np.ndarray:
        z = np.exp(2j * math.pi * np.arange(m) / m)
        return fn(z)

    return evaluator


def test_monomial():
    result = winding_number(_circle(lambda z: z**3))
    assert result.count == 3
    assert result.certified
    assert result.min_log_modulus == pytest.approx(0.0, abs=1e-12)


def test_constant():
    result = winding_number(_circle(lambda z: np.full(z.shape, 5.0 + 0j)))
    assert result.count == 0
    assert result.min_log_modulus == pytest.approx(math.log(5.0))
    assert result.refinement_depth == 0


def test_two_interior_zeros():
    result = winding_number(_circle(lambda z: z**2 - 0.25))
    assert result.count == 2
    assert result.status is CountStatus.CERTIFIED


def test_zero_on_the_curve_is_uncertain():
    result = winding_number(_circle(lambda z: z - 1.0), max_depth=3)
    assert result.status is CountStatus.UNCERTAIN
    assert result.refinement_depth == 3
    assert result.min_log_modulus == -math.inf


def test_refinement_for_high_degree():
    # z^10 turns by more than pi/2 per step on 16 and 32 points.
    result = winding_number(_circle(lambda z: z**10))
    assert result.count == 10
    assert result.grid_size == 64
    assert result.refinement_depth == 2


@pytest.mark.parametrize('grid', [10, 8, 24])
def test_grid_must_be_power_of_two(grid):
    with pytest.raises(ParameterInvalidError):
        winding_number(_circle(lambda z: z), initial_grid=grid)


def test_negative_depth():
    with pytest.raises(ParameterInvalidError):
        winding_number(_circle(lambda z: z), max_depth=-1)


def test_batch_counts_rows_independently():
    coeffs = np.array(
        [
            [1.0, 0.0, 0.0],
            [0.0, 1.0, 0.0],
            [-0.25, 0.0, 1.0],
        ],
        dtype=complex,
    )
    results = count_zeros_batch(coeffs, 0.0)
    assert [r.count for r in results] == [0, 1, 2]
    assert all(r.certified for r in results)


def test_batch_tail_bound_blocks_certification():
    # |f| = 1 on the circle, so a tail bound of 2 can never be beaten.
    (result,) = count_zeros_batch(np.array([[1.0, 0.0]]), 2.0, max_depth=2)
    assert result.status is CountStatus.UNCERTAIN


def test_result_to_dict():
    result = winding_number(_circle(lambda z: z))
    assert result.to_dict()['status'] == 'certified'


@pytest.mark.parametrize('slope,expected', [(1.0 + 1e-6, 1), (1.0 - 1e-6, 0)])
def test_root_just_off_the_circle(slope, expected):
    # The root 1/slope sits 1e-6 from the unit circle; only the chord test
    # can certify it before the grid spacing reaches that scale.
    (result,) = count_zeros_batch(np.array([[-1.0, slope]]), 0.0)
    assert result.certified
    assert result.count == expected
    assert result.grid_size <= 16 * 2**10


def test_counts_add_under_multiplication():
    ns = np.arange(7)
    log_a = -0.5 * gammaln(ns + 1.0)
    checked = 0
    for r in (0.8, 1.5, 2.5):
        scale = np.exp(log_a + ns * math.log(r))
        draws = draw_batch(12, range(40), ns.size)
        for f, g in zip(draws[:20] * scale, draws[20:] * scale):
            first, second = count_zeros_batch(np.array([f, g]), 0.0)
            (product,) = count_zeros_batch(np.convolve(f, g)[np.newaxis, :], 0.0)
            if first.certified and second.certified and product.certified:
                assert product.count == first.count + second.count
                checked += 1
    assert checked >= 55
