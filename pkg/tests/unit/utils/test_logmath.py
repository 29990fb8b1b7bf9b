import math

import numpy as np
import pytest

from holescope.utils.logmath import log1mexp, log1mexp_of_log, log_fsum, logsumexp


@pytest.mark.parametrize('x', [1e-20, 1e-5, 0.5, math.log(2.0), 3.0, 50.0])
def test_log1mexp(x):
    expected = math.log(-math.expm1(-x))
    assert float(log1mexp(x)) == pytest.approx(expected, rel=1e-12)


def test_log1mexp_of_log_matches_direct():
    for log_x in (-30.0, -20.0, -1.0, 0.0, 2.0):
        expected = math.log(-math.expm1(-math.exp(log_x)))
        assert float(log1mexp_of_log(log_x)) == pytest.approx(expected, rel=1e-12)


def test_log1mexp_of_log_underflow():
    # x = e^{-800} underflows, log(1 - e^{-x}) is still log x.
    assert float(log1mexp_of_log(-800.0)) == -800.0


def test_log1mexp_of_log_large():
    assert float(log1mexp_of_log(10.0)) == pytest.approx(-math.exp(-math.exp(10.0)), abs=1e-300)


def test_vectorized():
    out = log1mexp_of_log(np.array([-50.0, 1.0]))
    assert out.shape == (2,)


def test_log_fsum_is_compensated():
    assert log_fsum([1e16, 1.0, -1e16]) == 1.0
    assert log_fsum(np.ones((3, 4))) == 12.0


def test_logsumexp_is_reexported():
    assert logsumexp([0.0, 0.0]) == pytest.approx(math.log(2.0))
