import math

import pytest

from holescope.exceptions import ParameterInvalidError
from holescope.verify import volume_cn, volume_cn_monte_carlo


def test_one_dimension():
    report = volume_cn(1, 1.0, 0.3)
    assert report.exact == pytest.approx(0.3)
    assert report.applicable
    assert report.holds


def test_two_dimensions():
    report = volume_cn(2, 1.0, math.exp(-3.0))
    assert report.exact == pytest.approx(4.0 * math.exp(-3.0))
    assert report.bound == pytest.approx(9.0 * math.exp(-3.0))
    assert report.holds


def test_inapplicable_when_ratio_is_small():
    report = volume_cn(3, 1.0, 0.5)
    assert not report.applicable
    assert report.holds is None


def test_whole_box():
    report = volume_cn(2, 2.0, 10.0)
    assert report.exact == pytest.approx(4.0)
    assert report.bound == 0.0


@pytest.mark.parametrize('args', [(0, 1.0, 0.5), (2, 0.0, 0.5), (2, 1.0, -1.0)])
def test_validation(args):
    with pytest.raises(ParameterInvalidError):
        volume_cn(*args)


def test_monte_carlo_agrees():
    exact = volume_cn(2, 1.0, math.exp(-3.0)).exact
    estimate, se = volume_cn_monte_carlo(2, 1.0, math.exp(-3.0), 1_000_000, seed=0)
    assert abs(estimate - exact) <= 4.0 * se
