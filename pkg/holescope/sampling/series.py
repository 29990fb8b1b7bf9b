import math
from dataclasses import dataclass, field

import numpy as np

from holescope.coeffs import CoefficientModel
from holescope.config import DEFAULT_LOG_EPS
from holescope.exceptions import ParameterInvalidError
from holescope.sampling.rng import MAIN_NAMESPACE, draw_cells
from holescope.sampling.truncation import choose_truncation, truncation_log_tail


@dataclass(frozen=True, eq=False)
class SeriesSample:
    """One realization phi_0 .. phi_{n_trunc} of the random coefficients.

    ``log_eps`` is the relative tail level the truncation was chosen for at
    ``r_max``; -inf marks an exact polynomial. Constructed samples carry
    ``seed = None``.
    """

    seed: int | None
    stream_index: int
    n_trunc: int
    draws: np.ndarray = field(repr=False)
    r_max: float = math.inf
    log_eps: float = -math.inf

    def __post_init__(self):
        if self.draws.shape != (self.n_trunc + 1,):
            raise ParameterInvalidError(
                'draws', self.draws.shape, f'Expected {self.n_trunc + 1} coefficients.'
            )
        self.draws.setflags(write=False)

    @classmethod
    def from_draws(
        cls, draws, r_max: float = math.inf, log_eps: float = -math.inf
    ) -> 'SeriesSample':
        values = np.array(draws, dtype=complex)
        return cls(
            seed=None,
            stream_index=0,
            n_trunc=values.size - 1,
            draws=values,
            r_max=r_max,
            log_eps=log_eps,
        )

    def conjugate(self) -> 'SeriesSample':
        return SeriesSample(
            seed=self.seed,
            stream_index=self.stream_index,
            n_trunc=self.n_trunc,
            draws=np.conj(self.draws),
            r_max=self.r_max,
            log_eps=self.log_eps,
        )

    def rotated(self, alpha: float) -> 'SeriesSample':
        """phi_n -> phi_n e^{i n alpha}."""
        phases = np.exp(1j * alpha * np.arange(self.n_trunc + 1))
        return SeriesSample(
            seed=self.seed,
            stream_index=self.stream_index,
            n_trunc=self.n_trunc,
            draws=self.draws * phases,
            r_max=self.r_max,
            log_eps=self.log_eps,
        )


def sample_coefficients(
    seed: int,
    stream_index: int,
    n_trunc: int,
    r_max: float = math.inf,
    log_eps: float = -math.inf,
) -> SeriesSample:
    if n_trunc < 0:
        raise ParameterInvalidError('n_trunc', n_trunc, 'Must be non-negative.')
    draws = draw_cells(seed, stream_index, 0, n_trunc + 1, MAIN_NAMESPACE)
    return SeriesSample(
        seed=seed,
        stream_index=stream_index,
        n_trunc=n_trunc,
        draws=draws,
        r_max=r_max,
        log_eps=log_eps,
    )


def draw_sample(
    model: CoefficientModel,
    r: float,
    seed: int,
    stream_index: int,
    log_eps: float = DEFAULT_LOG_EPS,
) -> SeriesSample:
    """Truncate for radius r, then draw."""
    n_trunc = choose_truncation(model, r, log_eps)
    achieved = truncation_log_tail(model, r, n_trunc)
    return sample_coefficients(seed, stream_index, n_trunc, r_max=r, log_eps=achieved)
